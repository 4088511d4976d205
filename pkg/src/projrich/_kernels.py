"""Kernel dispatch: the compiled extension when built, else the Python fallback.

Set ``PROJRICH_PURE_PYTHON=1`` to force the fallback.
"""

import os

try:
    if os.environ.get("PROJRICH_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from ._ckernels import bruhat_cones, im_length, mul_table
    BACKEND = "cython"
except ImportError:
    from ._pykernels import bruhat_cones, im_length, mul_table
    BACKEND = "python"

__all__ = ["bruhat_cones", "im_length", "mul_table", "BACKEND"]
