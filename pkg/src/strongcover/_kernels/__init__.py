"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
twin.  Set STRONGCOVER_PURE=1 to force the pure backend (useful for
benchmark baselines and debugging).
"""

import os

from . import pure

if os.environ.get("STRONGCOVER_PURE"):
    _impl = pure
else:
    try:
        from strongcover import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
first_tk_violation = _impl.first_tk_violation
find_induced_c4 = _impl.find_induced_c4
maximal_cliques = _impl.maximal_cliques

__all__ = [
    "BACKEND",
    "first_tk_violation",
    "find_induced_c4",
    "maximal_cliques",
    "pure",
]
