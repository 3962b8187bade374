"""Kernel backend selection.

The compiled extension is preferred when importable; setting the
environment variable ``FINFRAME_PURE`` forces the pure-Python fallback.
Frames too large for the fixed-width compiled kernels are routed to the
pure backend transparently.
"""

from __future__ import annotations

import os

from . import _kernel_py as _pure

_compiled = None
if not os.environ.get("FINFRAME_PURE"):
    try:
        from . import _kernel as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"

# compiled kernels use 64-bit masks and a small fixed bit buffer
_ENUM_LIMIT = 24
_MASK_LIMIT = 62


def available_backends():
    names = ["pure"]
    if _compiled is not None:
        names.insert(0, "compiled")
    return names


def get_backend(name):
    """Return the backend module for ``name`` ('pure' or 'compiled')."""
    if name == "pure":
        return _pure
    if name == "compiled":
        if _compiled is None:
            raise ValueError("compiled kernel is not available")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


def sublocale_masks(n, top, meet_rows, colmasks):
    impl = _compiled if (_compiled is not None and n <= _ENUM_LIMIT) else _pure
    return impl.sublocale_masks(n, top, meet_rows, colmasks)


def pointwise_law_failures(n, bot, top, up, meet, join, imp):
    impl = _compiled if (_compiled is not None and n <= _MASK_LIMIT) else _pure
    return impl.pointwise_law_failures(n, bot, top, up, meet, join, imp)


def family_law_failures(n, bot, top, meet, join, imp, subsets):
    impl = _compiled if (_compiled is not None and n <= _MASK_LIMIT) else _pure
    return impl.family_law_failures(n, bot, top, meet, join, imp, subsets)
