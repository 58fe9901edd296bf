from ._kernels import DISABLE_ENV, NUMBA_AVAILABLE, use_numba
from .core import (
    CrossCheck,
    MonomialIdeal,
    StabilizationNotDetected,
    count_monomials,
    cross_check,
    hilbert_table,
    interpolate_eventual,
    minimalize,
)

__all__ = [
    "CrossCheck",
    "DISABLE_ENV",
    "MonomialIdeal",
    "NUMBA_AVAILABLE",
    "StabilizationNotDetected",
    "count_monomials",
    "cross_check",
    "hilbert_table",
    "interpolate_eventual",
    "minimalize",
    "use_numba",
]
