"""Backend selection for the folding-tree kernel.

The compiled extension is used when it imports; set ``GLHALL_PURE=1`` to force
the pure-Python implementation.
"""

from __future__ import annotations

import os

from . import _pykernel
from ._pykernel import KernelError, MixedMovementError, PathGuardExceeded

_compiled = None
if os.environ.get("GLHALL_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _compiled
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _pykernel
BACKEND = "cython" if _compiled is not None else "python"

path_stats = _impl.path_stats
greedy_steps = _impl.greedy_steps


def backends() -> dict[str, object]:
    """Every importable backend module, keyed by name."""
    out: dict[str, object] = {"python": _pykernel}
    if _compiled is not None:
        out["cython"] = _compiled
    else:
        try:
            from . import _ckernel

            out["cython"] = _ckernel
        except ImportError:
            pass
    return out


__all__ = [
    "BACKEND",
    "KernelError",
    "MixedMovementError",
    "PathGuardExceeded",
    "backends",
    "greedy_steps",
    "path_stats",
]
