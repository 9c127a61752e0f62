"""Backend dispatch for the hot numeric kernels.

The numba backend is the default when numba imports cleanly; set
EK_BACKEND=numpy to force the pure-numpy fallback, or EK_BACKEND=numba to
fail loudly when numba is unavailable.  Both backends implement identical
signatures and the test suite asserts they agree; benchmarks/bench_backends.py
compares their speed.
"""

from __future__ import annotations

import os

_requested = os.environ.get("EK_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        f"EK_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import numpy_backend as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_backend as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_backend as _impl

        BACKEND = "numpy"

chain_arrays = _impl.chain_arrays
chain_residuals = _impl.chain_residuals
horner_many = _impl.horner_many
aberth_solve = _impl.aberth_solve
newton_polish = _impl.newton_polish

__all__ = [
    "BACKEND",
    "chain_arrays",
    "chain_residuals",
    "horner_many",
    "aberth_solve",
    "newton_polish",
]
