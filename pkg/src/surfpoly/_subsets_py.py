"""Reference subset-minor engine built on the single-edge operations."""

from __future__ import annotations

from .ops import minor_pair
from .premap import Premap, component_params

SideStats = tuple[int, int, int, tuple[tuple[int, int, int, int], ...]]


def _side(q: Premap) -> SideStats:
    comps = component_params(q)
    v = sum(c.v for c in comps)
    f = sum(c.f for c in comps)
    return (v, q.m, f, tuple(sorted((c.gbar, c.v, c.e, c.f) for c in comps)))


class SubsetEngine:
    """Profiles (M/A, M\\Aᶜ) one subset at a time via explicit minors."""

    backend = "python"

    def __init__(self, p: Premap):
        self.p = p

    def profile(self, mask: int) -> tuple[SideStats, SideStats]:
        subset = [e for e in range(self.p.m) if mask >> e & 1]
        contracted, restricted = minor_pair(self.p, subset)
        return _side(contracted), _side(restricted)
