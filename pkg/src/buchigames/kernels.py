"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels``. Set ``BUCHIGAMES_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

if os.environ.get("BUCHIGAMES_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

attract = _impl.attract
bfs_probe = _impl.bfs_probe
oracle_table = _impl.oracle_table

# dovetailing interleaves Python generators, so it always runs here
attract_sliced = _pykernels.attract_sliced
Meter = _pykernels.Meter
