"""Premap construction from rotation systems, standard bouquets, unions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedRotation, SpecOutOfRange
from .premap import Premap

__all__ = [
    "HalfEdge",
    "RotationSystem",
    "BouquetSpec",
    "from_rotation_system",
    "standard_bouquet",
    "disjoint_union",
]


@dataclass(frozen=True)
class HalfEdge:
    """Reference to one end of an edge: edge id plus end index 0 or 1."""

    edge: int
    end: int


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic half-edge orders plus per-edge signs.

    ``signs[e]`` is +1 or -1; a negative sign embeds edge ``e`` with a twist.
    """

    edges: int
    vertices: tuple[tuple[HalfEdge, ...], ...]
    signs: tuple[int, ...]
    isolated_vertices: int = 0

    def check(self) -> None:
        if len(self.signs) != self.edges or any(s not in (1, -1) for s in self.signs):
            raise MalformedRotation("signs must be +1/-1, one per edge")
        seen: set[tuple[int, int]] = set()
        for rotation in self.vertices:
            for h in rotation:
                if not (0 <= h.edge < self.edges and h.end in (0, 1)):
                    raise MalformedRotation(f"half-edge {h.edge}.{h.end} out of range")
                if (h.edge, h.end) in seen:
                    raise MalformedRotation(f"half-edge {h.edge}.{h.end} appears twice")
                seen.add((h.edge, h.end))
        if len(seen) != 2 * self.edges:
            missing = 2 * self.edges - len(seen)
            raise MalformedRotation(f"{missing} half-edge(s) unplaced")


def from_rotation_system(r: RotationSystem) -> Premap:
    """Realize a signed rotation system as a premap.

    End 0 of edge ``e`` carries cross ``4e``; end 1 carries ``4e+3`` for a
    positive edge and ``4e+1`` for a negative one.  Each vertex contributes
    the cycle of carried crosses in rotation order plus its sigma-reversed
    partner, reproducing the defining orbit shapes for all three edge types.
    """
    r.check()

    def carried(h: HalfEdge) -> int:
        if h.end == 0:
            return 4 * h.edge
        return 4 * h.edge + (3 if r.signs[h.edge] > 0 else 1)

    cycles = []
    for rotation in r.vertices:
        primary = [carried(h) for h in rotation]
        if primary:
            cycles.append(primary)
            cycles.append([x ^ 2 for x in reversed(primary)])
    empty_rotations = sum(1 for rotation in r.vertices if not rotation)
    return Premap.from_cycles(
        r.edges, cycles, r.isolated_vertices + empty_rotations
    )


@dataclass(frozen=True)
class BouquetSpec:
    orientable: bool
    genus: int
    edges: int

    def check(self) -> None:
        if self.genus < 0 or self.edges < 0:
            raise SpecOutOfRange("negative genus or edge count")
        if self.orientable and self.edges < 2 * self.genus:
            raise SpecOutOfRange("orientable bouquet needs at least 2g edges")
        if not self.orientable and (self.genus < 1 or self.edges < self.genus):
            raise SpecOutOfRange("non-orientable bouquet needs g >= 1 and m >= g")


def standard_bouquet(spec: BouquetSpec) -> Premap:
    """One-vertex map whose loops realize the given genus exactly.

    Orientable: the first 2g loops interleave in handle pairs
    (a1 a2 ts(a1) ts(a2) ...); non-orientable: the first g loops are twisted
    (a1 t(a1) ...).  Remaining loops are planar (ai ts(ai)).
    """
    spec.check()
    m, g = spec.edges, spec.genus
    if m == 0:
        return Premap(0, (), 1)

    primary: list[int] = []
    if spec.orientable:
        for i in range(g):
            a1, a2 = 4 * (2 * i), 4 * (2 * i + 1)
            primary += [a1, a2, a1 ^ 3, a2 ^ 3]
        tail_start = 2 * g
    else:
        for i in range(g):
            a = 4 * i
            primary += [a, a ^ 1]
        tail_start = g
    for i in range(tail_start, m):
        a = 4 * i
        primary += [a, a ^ 3]
    partner = [x ^ 2 for x in reversed(primary)]
    return Premap.from_cycles(m, [primary, partner])


def disjoint_union(ps: list[Premap]) -> Premap:
    """Concatenate premaps, offsetting edge ids cumulatively."""
    tau: list[int] = []
    offset = 0
    isolated = 0
    for p in ps:
        tau.extend(x + offset for x in p.tau)
        offset += 4 * p.m
        isolated += p.isolated_vertices
    return Premap(offset // 4, tuple(tau), isolated)
