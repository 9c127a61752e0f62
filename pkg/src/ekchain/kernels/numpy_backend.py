"""Pure-numpy implementations of the hot numeric kernels.

All functions take/return plain float64/complex128 ndarrays so the numba
backend can mirror the signatures exactly.  Angle arguments must satisfy
sin(theta/2) != 0 (the object layer rejects multiples of pi before calling).
"""

from __future__ import annotations

import numpy as np


def chain_arrays(p: np.ndarray, theta: float):
    """Partial sums, probe points, circle centers and radii of a chain.

    Parameters
    ----------
    p : float64[n+1]
        Strictly positive coefficients.
    theta : float
        Step angle, not a multiple of pi.

    Returns
    -------
    xs, ys : float64[n+1]   running sums sum_{m<=k} p_m e^{im*theta}
    sx, sy : float64[n]     probes S_k = R_{k-1} + p_{k-1} e^{ik*theta}
    cx, cy : float64[n+1]   circle centers, C_k = R_{k-1} advanced by
                            (p_k/2) e^{ik*theta} rotated toward the chord normal
    r : float64[n+1]        radii (p_k/2) csc(theta/2)
    """
    half = 0.5 * theta
    s = np.sin(half)
    csc = 1.0 / s
    cot = np.cos(half) / s

    n1 = p.shape[0]
    k = np.arange(n1, dtype=np.float64)
    ck = np.cos(k * theta)
    sk = np.sin(k * theta)

    dx = p * ck
    dy = p * sk
    xs = np.cumsum(dx)
    ys = np.cumsum(dy)

    xprev = np.empty(n1)
    yprev = np.empty(n1)
    xprev[0] = 0.0
    yprev[0] = 0.0
    xprev[1:] = xs[:-1]
    yprev[1:] = ys[:-1]

    sx = xprev[1:] + p[:-1] * ck[1:]
    sy = yprev[1:] + p[:-1] * sk[1:]

    hp = 0.5 * p
    cx = xprev + hp * (ck - sk * cot)
    cy = yprev + hp * (sk + ck * cot)
    r = hp * csc
    return xs, ys, sx, sy, cx, cy, r


def chain_residuals(
    xs: np.ndarray,
    ys: np.ndarray,
    sx: np.ndarray,
    sy: np.ndarray,
    cx: np.ndarray,
    cy: np.ndarray,
    r: np.ndarray,
    coincident: np.ndarray,
):
    """Residuals of the interlacing identities for one chain.

    Returns (tangency[n], membership[2n], probe[n], collinearity[n]).
    For each k in 1..n:
      tangency[k-1]       | dist(C_k, C_{k-1}) - |r_k - r_{k-1}| |
      membership[2k-2]    | dist(C_k,     R_{k-1}) - r_k     |
      membership[2k-1]    | dist(C_{k-1}, R_{k-1}) - r_{k-1} |
      probe[k-1]          | dist(C_{k-1}, S_k) - r_{k-1} |
      collinearity[k-1]   | det(R_{k-1}, C_{k-1}, C_k) |
    Tangency and collinearity entries across coincident pairs are exact 0.
    """
    n = xs.shape[0] - 1
    dist_c = np.hypot(cx[1:] - cx[:-1], cy[1:] - cy[:-1])
    tangency = np.abs(dist_c - np.abs(r[1:] - r[:-1]))

    d_on_k = np.hypot(cx[1:] - xs[:-1], cy[1:] - ys[:-1])
    d_on_km1 = np.hypot(cx[:-1] - xs[:-1], cy[:-1] - ys[:-1])
    membership = np.empty(2 * n)
    membership[0::2] = np.abs(d_on_k - r[1:])
    membership[1::2] = np.abs(d_on_km1 - r[:-1])

    probe = np.abs(np.hypot(cx[:-1] - sx, cy[:-1] - sy) - r[:-1])

    det = (cx[:-1] - xs[:-1]) * (cy[1:] - ys[:-1]) - (cx[1:] - xs[:-1]) * (
        cy[:-1] - ys[:-1]
    )
    collinearity = np.abs(det)

    mask = coincident.astype(bool)
    tangency[mask] = 0.0
    collinearity[mask] = 0.0
    return tangency, membership, probe, collinearity


def horner_many(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Evaluate sum a_k z^k (a ascending, real) at each complex z."""
    out = np.full(z.shape, complex(a[-1]), dtype=np.complex128)
    for i in range(a.shape[0] - 2, -1, -1):
        out = out * z + a[i]
    return out


def aberth_solve(a: np.ndarray, z0: np.ndarray, rel_tol: float, max_iter: int):
    """Simultaneous root iteration with Newton corrections coupled
    through the pairwise repulsion term.

    Jacobi-style sweep: every correction in a sweep is computed from the
    previous iterate, which keeps the trajectory independent of root order.
    The correction threshold is relaxed by x100 after 150 sweeps so that
    near-multiple clusters terminate instead of ping-ponging.

    Returns (z, iterations, relaxed).
    """
    deg = z0.shape[0]
    nc = a.shape[0]
    deriv = a[1:] * np.arange(1, nc, dtype=np.float64)
    z = z0.copy()
    relaxed = False
    it = 0
    for it in range(1, max_iter + 1):
        tol_eff = rel_tol
        if it > 150:
            tol_eff = rel_tol * 100.0
            relaxed = True
        pv = horner_many(a, z)
        dv = horner_many(deriv, z)
        dv = np.where(dv == 0.0, 1e-300 + 0.0j, dv)
        ratio = pv / dv

        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        ssum = (1.0 / diff).sum(axis=1)

        denom = 1.0 - ratio * ssum
        denom = np.where(denom == 0.0, 1.0 + 0.0j, denom)
        w = ratio / denom
        z = z - w

        corr = np.abs(w) / np.maximum(np.abs(z), 1e-300)
        if corr.max() < tol_eff:
            break
    return z, it, relaxed


def newton_polish(a: np.ndarray, z: np.ndarray, steps: int) -> np.ndarray:
    """A fixed number of independent Newton steps on each root estimate."""
    nc = a.shape[0]
    deriv = a[1:] * np.arange(1, nc, dtype=np.float64)
    out = z.copy()
    for _ in range(steps):
        pv = horner_many(a, out)
        dv = horner_many(deriv, out)
        dv = np.where(dv == 0.0, 1e-300 + 0.0j, dv)
        out = out - pv / dv
    return out
