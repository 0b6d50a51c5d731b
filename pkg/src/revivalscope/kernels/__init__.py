"""Kernel backend selection.

The compiled extension (``_fast``) is preferred; the NumPy reference
implementation (``_ref``) is used when the extension is missing or when
the environment variable REVIVALSCOPE_PURE_PYTHON=1 forces it.
"""

import os

from . import _ref

if os.environ.get("REVIVALSCOPE_PURE_PYTHON", "") == "1":
    _impl = _ref
    BACKEND = "python"
else:
    try:
        from . import _fast as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _ref
        BACKEND = "python"

TWO_PI_LD = _ref.TWO_PI_LD
AIRY_SWITCH = _ref.AIRY_SWITCH
AIRY_UNDERFLOW = _ref.AIRY_UNDERFLOW

phase_table = _impl.phase_table
airy_ai_values = _impl.airy_ai_values
airy_ai_prime_values = _impl.airy_ai_prime_values
laguerre_values = _impl.laguerre_values
simpson_integral = _impl.simpson_integral
entropy_integral = _impl.entropy_integral
