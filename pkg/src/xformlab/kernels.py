"""Kernel backend selection.

The compiled extension (``xformlab._xkernels``) is preferred when it built;
``XFORMLAB_PURE_PYTHON=1`` forces the pure-Python reference implementation.
Both backends expose the same six functions with identical exact semantics,
so everything above this module is backend-agnostic.
"""

import os

if os.environ.get("XFORMLAB_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _xkernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

qq_mat_mul = _impl.qq_mat_mul
qq_rref = _impl.qq_rref
qq_berkowitz = _impl.qq_berkowitz
fp_mat_mul = _impl.fp_mat_mul
fp_rref = _impl.fp_rref
fp_berkowitz = _impl.fp_berkowitz
