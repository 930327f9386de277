"""Backend selection for the subset-minor profiling engine.

The compiled engine is used when available; set SURFPOLY_BACKEND=python or
SURFPOLY_BACKEND=c to force a choice (forcing "c" fails loudly when the
extension was not built).
"""

from __future__ import annotations

import os

from . import _subsets_py
from .ops import dual
from .premap import Premap, map_params

try:
    from . import _subsets_c
except ImportError:
    _subsets_c = None

__all__ = ["engine", "backend_name", "available_backends"]


def _selected() -> str:
    forced = os.environ.get("SURFPOLY_BACKEND", "").strip().lower()
    if forced == "python":
        return "python"
    if forced == "c":
        if _subsets_c is None:
            raise ImportError("SURFPOLY_BACKEND=c but the compiled engine is not built")
        return "c"
    if forced:
        raise ValueError(f"unknown SURFPOLY_BACKEND value {forced!r}")
    return "c" if _subsets_c is not None else "python"


def backend_name() -> str:
    return _selected()


def available_backends() -> list[str]:
    return ["python"] + (["c"] if _subsets_c is not None else [])


def engine(p: Premap, backend: str | None = None):
    """Subset engine for ``p``; ``profile(mask)`` returns the statistics
    (v, e, f, components) of M/A and M\\Aᶜ for the subset encoded by ``mask``.
    Each component entry is (signed genus, v, e, f)."""
    choice = backend or _selected()
    if choice == "python":
        return _subsets_py.SubsetEngine(p)
    if choice == "c":
        if _subsets_c is None:
            raise ImportError("compiled engine not built")
        return _subsets_c.SubsetEngine(
            p.m,
            list(p.tau),
            list(dual(p).tau),
            map_params(p).v,
            map_params(dual(p)).v,
        )
    raise ValueError(f"unknown backend {choice!r}")
