"""Backend selection for the search kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``HOLESAT_PURE_PYTHON=1`` to force
the fallback. Both backends return identical results, including
expansion counts.
"""

import os

from . import _pykernels

FOUND = _pykernels.FOUND
NONE_EXISTS = _pykernels.NONE_EXISTS
TIMEOUT = _pykernels.TIMEOUT

_impl = _pykernels
if not os.environ.get("HOLESAT_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        pass

BACKEND = "python" if _impl is _pykernels else "cython"

shortest_hole = _impl.shortest_hole
odd_hole_through = _impl.odd_hole_through


def backends() -> dict:
    """All importable backends by name, for benchmarks and parity tests."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
