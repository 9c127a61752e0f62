"""Numba-jitted implementations of the hot numeric kernels.

Same signatures and same Jacobi sweep structure as the numpy backend; the
loops here are what the @njit compiler wants, the vectorized forms are what
numpy wants.  Cached to disk so repeat runs skip compilation.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def chain_arrays(p, theta):
    half = 0.5 * theta
    s = math.sin(half)
    csc = 1.0 / s
    cot = math.cos(half) / s

    n1 = p.shape[0]
    xs = np.empty(n1)
    ys = np.empty(n1)
    sx = np.empty(n1 - 1)
    sy = np.empty(n1 - 1)
    cx = np.empty(n1)
    cy = np.empty(n1)
    r = np.empty(n1)

    xprev = 0.0
    yprev = 0.0
    for k in range(n1):
        ck = math.cos(k * theta)
        sk = math.sin(k * theta)
        if k >= 1:
            sx[k - 1] = xprev + p[k - 1] * ck
            sy[k - 1] = yprev + p[k - 1] * sk
        hp = 0.5 * p[k]
        cx[k] = xprev + hp * (ck - sk * cot)
        cy[k] = yprev + hp * (sk + ck * cot)
        r[k] = hp * csc
        xprev = xprev + p[k] * ck
        yprev = yprev + p[k] * sk
        xs[k] = xprev
        ys[k] = yprev
    return xs, ys, sx, sy, cx, cy, r


@njit(cache=True)
def chain_residuals(xs, ys, sx, sy, cx, cy, r, coincident):
    n = xs.shape[0] - 1
    tangency = np.empty(n)
    membership = np.empty(2 * n)
    probe = np.empty(n)
    collinearity = np.empty(n)
    for k in range(1, n + 1):
        i = k - 1
        if coincident[i]:
            tangency[i] = 0.0
            collinearity[i] = 0.0
        else:
            dist_c = math.hypot(cx[k] - cx[i], cy[k] - cy[i])
            tangency[i] = abs(dist_c - abs(r[k] - r[i]))
            det = (cx[i] - xs[i]) * (cy[k] - ys[i]) - (cx[k] - xs[i]) * (cy[i] - ys[i])
            collinearity[i] = abs(det)
        d_on_k = math.hypot(cx[k] - xs[i], cy[k] - ys[i])
        d_on_km1 = math.hypot(cx[i] - xs[i], cy[i] - ys[i])
        membership[2 * i] = abs(d_on_k - r[k])
        membership[2 * i + 1] = abs(d_on_km1 - r[i])
        probe[i] = abs(math.hypot(cx[i] - sx[i], cy[i] - sy[i]) - r[i])
    return tangency, membership, probe, collinearity


@njit(cache=True)
def horner_many(a, z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    nc = a.shape[0]
    for j in range(z.shape[0]):
        acc = a[nc - 1] + 0.0j
        for i in range(nc - 2, -1, -1):
            acc = acc * z[j] + a[i]
        out[j] = acc
    return out


@njit(cache=True)
def aberth_solve(a, z0, rel_tol, max_iter):
    deg = z0.shape[0]
    nc = a.shape[0]
    deriv = np.empty(nc - 1)
    for i in range(1, nc):
        deriv[i - 1] = a[i] * i

    z = z0.copy()
    znew = np.empty(deg, dtype=np.complex128)
    relaxed = False
    it = 0
    for it in range(1, max_iter + 1):
        tol_eff = rel_tol
        if it > 150:
            tol_eff = rel_tol * 100.0
            relaxed = True
        maxcorr = 0.0
        for j in range(deg):
            zj = z[j]
            pv = a[nc - 1] + 0.0j
            for i in range(nc - 2, -1, -1):
                pv = pv * zj + a[i]
            dv = deriv[nc - 2] + 0.0j
            for i in range(nc - 3, -1, -1):
                dv = dv * zj + deriv[i]
            if dv == 0.0:
                dv = 1e-300 + 0.0j
            ratio = pv / dv
            ssum = 0.0 + 0.0j
            for m in range(deg):
                if m != j:
                    ssum += 1.0 / (zj - z[m])
            denom = 1.0 - ratio * ssum
            if denom == 0.0:
                denom = 1.0 + 0.0j
            w = ratio / denom
            znew[j] = zj - w
            corr = abs(w) / max(abs(znew[j]), 1e-300)
            if corr > maxcorr:
                maxcorr = corr
        z[:] = znew
        if maxcorr < tol_eff:
            break
    return z, it, relaxed


@njit(cache=True)
def newton_polish(a, z, steps):
    nc = a.shape[0]
    deriv = np.empty(nc - 1)
    for i in range(1, nc):
        deriv[i - 1] = a[i] * i
    out = z.copy()
    for _ in range(steps):
        for j in range(out.shape[0]):
            zj = out[j]
            pv = a[nc - 1] + 0.0j
            for i in range(nc - 2, -1, -1):
                pv = pv * zj + a[i]
            dv = deriv[nc - 2] + 0.0j
            for i in range(nc - 3, -1, -1):
                dv = dv * zj + deriv[i]
            if dv == 0.0:
                dv = 1e-300 + 0.0j
            out[j] = zj - pv / dv
    return out
