"""Bitset kernels for component counting and cut-set enumeration.

The compiled extension is used when it was built; otherwise the pure-Python
implementation is selected. Set ``CLUTTERBEI_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

if os.environ.get("CLUTTERBEI_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

count_components = _impl.count_components
component_masks = _impl.component_masks
component_table = _impl.component_table
cut_set_masks = _impl.cut_set_masks

__all__ = [
    "BACKEND",
    "component_masks",
    "component_table",
    "count_components",
    "cut_set_masks",
]
