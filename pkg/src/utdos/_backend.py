"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``UTDOS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("UTDOS_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

square_codes = kernels.square_codes
difference_mask = kernels.difference_mask
