"""Selection between the compiled compatible-pair counter and the
pure-Python fallback.

The compiled extension is optional: if it failed to build (or was built
for a different interpreter) everything still works through the
reference implementation in :mod:`rank2greedy.dyck`, just slower.  The
compiled kernel represents edge subsets as 64-bit masks, so it only
handles paths with at most 63 edges per side; larger sizes silently fall
back.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from . import dyck

try:
    from . import _kernel  # type: ignore[attr-defined]

    HAVE_NATIVE = True
except ImportError:  # pragma: no cover - depends on the build
    _kernel = None
    HAVE_NATIVE = False

_MASK_LIMIT = 63


def count_grid(a1: int, a2: int, b: int, c: int,
               force: Optional[str] = None) -> Dict[Tuple[int, int], int]:
    """Grid (p, q) -> number of compatible pairs with |S2| = p, |S1| = q
    on the maximal Dyck path of size a1 x a2.

    ``force`` may be "native" or "pure" to pin the implementation;
    by default the compiled kernel is used whenever it applies.
    """
    if force not in (None, "native", "pure"):
        raise ValueError("force must be None, 'native' or 'pure'")
    if force == "native":
        if not HAVE_NATIVE:
            raise RuntimeError("compiled kernel is not available")
        return _kernel.count_grid(a1, a2, b, c)
    if force == "pure":
        return dyck.count_compatible(dyck.DyckPath(a1, a2), b, c)
    if HAVE_NATIVE and a1 <= _MASK_LIMIT and a2 <= _MASK_LIMIT:
        return _kernel.count_grid(a1, a2, b, c)
    return dyck.count_compatible(dyck.DyckPath(a1, a2), b, c)
