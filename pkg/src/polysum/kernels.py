"""Select the compiled kernels when available, else the pure-Python ones.

Set ``POLYSUM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("POLYSUM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

adjacent_pairs = _impl.adjacent_pairs
dot_all = _impl.dot_all

__all__ = ["BACKEND", "adjacent_pairs", "dot_all"]
