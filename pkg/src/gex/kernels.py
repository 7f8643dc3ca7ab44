"""Kernel backend selection.

The compiled extension is preferred; ``GEX_PURE_PYTHON=1`` forces the
numpy fallback.
"""

import os

from . import _kernels_py

if os.environ.get("GEX_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
triangle_integral = _impl.triangle_integral
triangle_and_children = _impl.triangle_and_children
slope_table = _impl.slope_table

__all__ = ["BACKEND", "triangle_integral", "triangle_and_children", "slope_table", "backends"]


def backends():
    """All importable backends, keyed by name (for tests and benchmarks)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
