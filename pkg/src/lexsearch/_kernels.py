"""Backend selection for the hot kernels.

The compiled ``_lbfs_core`` is used when importable; otherwise, or when
``LEXSEARCH_PURE_PYTHON`` is set, the pure-Python ``_lbfs_py`` takes over.
"""

import os

from . import _lbfs_py

if os.environ.get("LEXSEARCH_PURE_PYTHON"):
    _impl = _lbfs_py
else:
    try:
        from . import _lbfs_core as _impl
    except ImportError:  # extension not built
        _impl = _lbfs_py

BACKEND = "cython" if _impl is not _lbfs_py else "python"

lbfs_order = _impl.lbfs_order
first_violation = _impl.first_violation
bfs_distances = _impl.bfs_distances


def backends():
    """Mapping of every importable backend name to its module."""
    found = {"python": _lbfs_py}
    try:
        from . import _lbfs_core

        found["cython"] = _lbfs_core
    except ImportError:
        pass
    return found
