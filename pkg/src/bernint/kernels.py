"""Kernel backend selection.

The compiled Cython kernels are used when the extension built; otherwise the
pure-Python twins take over.  `use_backend` lets benchmarks and tests force a
specific one, and the BERNINT_BACKEND environment variable ("pure" or
"compiled") pins the choice at import time.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels as _pure

_impls: dict[str, ModuleType] = {"pure": _pure}
try:
    from . import _ckernels as _compiled  # type: ignore[attr-defined]

    _impls["compiled"] = _compiled
except ImportError:
    pass

__all__ = ["active_backend", "available_backends", "closed_form_sum", "convolve", "use_backend"]


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_impls))


def _resolve(name: str) -> ModuleType:
    if name == "auto":
        return _impls.get("compiled", _pure)
    try:
        return _impls[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; available: {', '.join(available_backends())}"
        ) from None


_active = _resolve(os.environ.get("BERNINT_BACKEND", "auto"))


def use_backend(name: str) -> str:
    """Switch the active backend ("pure", "compiled" or "auto"); returns its name."""
    global _active
    _active = _resolve(name)
    return active_backend()


def active_backend() -> str:
    return "compiled" if _active is _impls.get("compiled") else "pure"


def closed_form_sum(ks, xnum, xden, onum, oden):
    return _active.closed_form_sum(ks, xnum, xden, onum, oden)


def convolve(a, b):
    return _active.convolve(a, b)
