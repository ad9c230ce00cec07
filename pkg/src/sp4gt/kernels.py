"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting SP4GT_PURE_PYTHON=1 forces the fallback.
"""

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("SP4GT_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py

BACKEND = _impl.BACKEND
poly_add_into = _impl.poly_add_into
poly_mul = _impl.poly_mul
poly_pow = _impl.poly_pow
reduce_poly = _impl.reduce_poly
apply_derivation = _impl.apply_derivation
sparse_dot_rows = _impl.sparse_dot_rows


def backends():
    """Return the available backend modules keyed by name."""
    found = {"python": _kernels_py}
    if _compiled is not None:
        found["compiled"] = _compiled
    else:
        try:
            from . import _kernels as mod  # type: ignore[attr-defined]

            found["compiled"] = mod
        except ImportError:
            pass
    return found
