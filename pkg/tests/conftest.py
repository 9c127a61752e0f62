import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240901)


def monotone_coeffs(rng, n: int, increasing: bool, low: float = 0.05, high: float = 1.0):
    """Random strictly positive monotone coefficients of degree n."""
    values = np.sort(rng.uniform(low, high, n + 1))
    if not increasing:
        values = values[::-1]
    return values.copy()


def direct_endpoint(coeffs, theta: float) -> complex:
    """Independent oracle: sum c_k e^{ik*theta} by plain complex arithmetic."""
    return complex(sum(c * np.exp(1j * k * theta) for k, c in enumerate(coeffs)))
