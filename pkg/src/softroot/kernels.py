"""Backend selection for the integer kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  ``BACKEND`` names the one in effect.
"""

try:
    from ._kernels import exp_series, sincos_series, taylor_shift
    BACKEND = "cython"
except ImportError:
    from ._kernels_py import exp_series, sincos_series, taylor_shift
    BACKEND = "python"

__all__ = ["BACKEND", "exp_series", "sincos_series", "taylor_shift"]
