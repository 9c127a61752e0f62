"""Backend parity: the numba kernels and the numpy fallback must agree."""

import subprocess
import sys

import numpy as np
import pytest

from ekchain.kernels import numba_backend, numpy_backend


def random_case(rng, max_degree=50):
    n = int(rng.integers(1, max_degree + 1))
    p = np.sort(rng.uniform(0.05, 1.0, n + 1))
    theta = float(rng.uniform(0.02, 2 * np.pi - 0.02))
    if abs(theta - np.pi) < 0.02:
        theta += 0.05
    return p, theta


class TestChainKernels:
    def test_chain_arrays_agree(self, rng):
        for _ in range(30):
            p, theta = random_case(rng)
            a = numpy_backend.chain_arrays(p, theta)
            b = numba_backend.chain_arrays(p, theta)
            for x, y in zip(a, b):
                np.testing.assert_allclose(x, y, rtol=1e-12, atol=1e-12)

    def test_chain_residuals_agree(self, rng):
        for _ in range(30):
            p, theta = random_case(rng)
            flags = np.zeros(len(p) - 1, dtype=bool)
            arrays = numpy_backend.chain_arrays(p, theta)
            a = numpy_backend.chain_residuals(*arrays, flags)
            b = numba_backend.chain_residuals(*arrays, flags)
            for x, y in zip(a, b):
                np.testing.assert_allclose(x, y, rtol=1e-9, atol=1e-14)

    def test_coincident_entries_are_exact_zero(self):
        p = np.array([1.0, 2.0, 2.0])
        theta = 1.0
        flags = np.array([False, True])
        for mod in (numpy_backend, numba_backend):
            arrays = mod.chain_arrays(p, theta)
            tangency, _, _, collinearity = mod.chain_residuals(*arrays, flags)
            assert tangency[1] == 0.0
            assert collinearity[1] == 0.0

    def test_deterministic_across_calls(self, rng):
        p, theta = random_case(rng)
        for mod in (numpy_backend, numba_backend):
            a = mod.chain_arrays(p, theta)
            b = mod.chain_arrays(p, theta)
            for x, y in zip(a, b):
                assert np.array_equal(x, y)


class TestRootKernels:
    def test_aberth_agrees(self, rng):
        for _ in range(20):
            d = int(rng.integers(1, 13))
            a = rng.uniform(0.05, 10.0, d + 1)
            z0 = np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.618))
            za, ia, _ = numpy_backend.aberth_solve(a, z0, 1e-14, 200)
            zb, ib, _ = numba_backend.aberth_solve(a, z0, 1e-14, 200)
            # compare as sets: conjugate pairs may sort differently when the
            # real parts differ in the last ulp
            pairwise = np.abs(za[:, None] - zb[None, :])
            hausdorff = max(pairwise.min(axis=0).max(), pairwise.min(axis=1).max())
            assert hausdorff < 1e-9

    def test_horner_agrees(self, rng):
        a = rng.uniform(0.1, 5.0, 9)
        z = (rng.normal(size=6) + 1j * rng.normal(size=6)).astype(np.complex128)
        np.testing.assert_allclose(
            numpy_backend.horner_many(a, z),
            numba_backend.horner_many(a, z),
            rtol=1e-13,
        )


class TestBackendSelection:
    @pytest.mark.parametrize("choice,expected", [("numpy", "numpy"), ("numba", "numba"), ("", "numba")])
    def test_env_flag(self, choice, expected):
        code = "from ekchain.kernels import BACKEND; print(BACKEND)"
        env = {"EK_BACKEND": choice} if choice else {}
        import os

        full_env = dict(os.environ)
        full_env.pop("EK_BACKEND", None)
        full_env.update(env)
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=full_env
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == expected

    def test_invalid_flag_rejected(self):
        import os

        env = dict(os.environ)
        env["EK_BACKEND"] = "fortran"
        out = subprocess.run(
            [sys.executable, "-c", "import ekchain.kernels"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert out.returncode != 0
        assert "EK_BACKEND" in out.stderr
