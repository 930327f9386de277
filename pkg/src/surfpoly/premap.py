"""Maps on compact surfaces encoded as permutations on crosses.

An edge ``e`` owns the four crosses ``4e .. 4e+3``.  With ``a = 4e`` the
side/end involutions are fixed by the id convention::

    theta(a) = a ^ 1        (other end, same side)
    sigma(a) = a ^ 2        (other side, same end)

so only the vertex rotation ``tau`` is stored.  The face rotation is
``phi(a) = tau[a ^ 3]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import EdgeOutOfRange, InvalidPremap

__all__ = [
    "Premap",
    "MapParams",
    "EdgeKind",
    "ValidationReport",
    "validate_premap",
    "map_params",
    "component_params",
    "components",
    "classify_edge",
    "canonical_form",
    "equivalent",
    "tau_cycles",
]


@dataclass(frozen=True)
class Premap:
    """Immutable premap value: edge count, vertex rotation, isolated vertices.

    ``tau`` is the image array of the vertex rotation on crosses
    ``0 .. 4m-1``.  Isolated vertices (pairs of empty tau-cycles, which an
    image array cannot encode) are kept as a count.
    """

    m: int
    tau: tuple[int, ...]
    isolated_vertices: int = 0

    def __post_init__(self) -> None:
        if self.m < 0 or self.isolated_vertices < 0:
            raise ValueError("negative edge or vertex count")
        if len(self.tau) != 4 * self.m:
            raise ValueError(f"tau has length {len(self.tau)}, expected {4 * self.m}")
        if not isinstance(self.tau, tuple):
            object.__setattr__(self, "tau", tuple(self.tau))

    @classmethod
    def from_cycles(
        cls, m: int, cycles: Iterable[Sequence[int]], isolated_vertices: int = 0
    ) -> "Premap":
        """Build a premap from the nonempty cycles of tau (fixed points implied)."""
        images = list(range(4 * m))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 0 <= a < 4 * m:
                    raise ValueError(f"cross {a} out of range for m={m}")
                images[a] = b
        return cls(m, tuple(images), isolated_vertices)

    @property
    def crosses(self) -> range:
        return range(4 * self.m)

    def phi(self, x: int) -> int:
        """Face rotation tau . theta . sigma."""
        return self.tau[x ^ 3]

    def phi_images(self) -> tuple[int, ...]:
        return tuple(self.tau[x ^ 3] for x in self.crosses)

    def edges(self) -> range:
        return range(self.m)


class EdgeKind(Enum):
    NON_LOOP = "non-loop"
    NON_TWISTED_LOOP = "non-twisted-loop"
    TWISTED_LOOP = "twisted-loop"


@dataclass(frozen=True)
class MapParams:
    """Numerical parameters of a map (totals or a single component)."""

    v: int
    e: int
    f: int
    k: int
    chi: int
    s: int
    gbar: int
    orientable: bool
    r: int
    n: int
    rstar: int
    nstar: int


@dataclass
class ValidationReport:
    ok: bool = True
    violations: list[tuple[str, int | None]] = field(default_factory=list)

    def add(self, code: str, witness: int | None = None) -> None:
        self.ok = False
        self.violations.append((code, witness))

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(
            code if w is None else f"{code} (witness cross {w})"
            for code, w in self.violations
        )


def tau_cycles(tau: Sequence[int], crosses: Iterable[int] | None = None) -> list[list[int]]:
    """Nonempty disjoint cycles of an image array, ordered by minimal element."""
    seen = set()
    cycles = []
    for start in crosses if crosses is not None else range(len(tau)):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = tau[x]
        cycles.append(cyc)
    return cycles


def validate_premap(p: Premap) -> ValidationReport:
    """Check bijectivity, axioms (3) and (4), and tau-cycle pairing.

    Axioms (1) and (2) hold by the cross-id convention and are not checked.
    """
    report = ValidationReport()
    n = 4 * p.m
    if sorted(p.tau) != list(range(n)):
        report.add("NotBijective")
        return report

    inv = [0] * n
    for x, y in enumerate(p.tau):
        inv[y] = x

    # Axiom (3): tau sigma == sigma tau^{-1}.
    for x in range(n):
        if p.tau[x ^ 2] != inv[x] ^ 2:
            report.add("AxiomThreeViolated", x)
            break

    # Axiom (4): a and sigma(a) lie in distinct tau-orbits.
    cycle_of = {}
    for i, cyc in enumerate(tau_cycles(p.tau)):
        for x in cyc:
            cycle_of[x] = i
    for x in range(n):
        if cycle_of[x] == cycle_of[x ^ 2]:
            report.add("AxiomFourViolated", x)
            break

    if report.ok:
        # Pairing: the cycle through sigma(a) is the sigma-image of the
        # reversed cycle through a.  Implied by axiom (3) + (4); asserted
        # anyway so the report never lies.
        for cyc in tau_cycles(p.tau):
            partner = [x ^ 2 for x in reversed(cyc)]
            x = partner[0]
            got = [x]
            for _ in range(len(partner) - 1):
                x = p.tau[x]
                got.append(x)
            rot = _rotate_min(partner)
            if _rotate_min(got) != rot:
                report.add("CyclePairingViolated", cyc[0])
                break
    return report


def require_valid(p: Premap) -> Premap:
    report = validate_premap(p)
    if not report.ok:
        raise InvalidPremap(report)
    return p


def _rotate_min(cyc: list[int]) -> tuple[int, ...]:
    if not cyc:
        return ()
    i = cyc.index(min(cyc))
    return tuple(cyc[i:] + cyc[:i])


def classify_edge(p: Premap, e: int) -> EdgeKind:
    """Non-loop, non-twisted loop, or twisted loop, from tau-cycle incidence."""
    if not 0 <= e < p.m:
        raise EdgeOutOfRange(e)
    a = 4 * e
    x = p.tau[a]
    while x != a:
        if x == a ^ 1:
            return EdgeKind.TWISTED_LOOP
        if x == a ^ 3:
            return EdgeKind.NON_TWISTED_LOOP
        x = p.tau[x]
    return EdgeKind.NON_LOOP


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _component_cross_sets(p: Premap) -> list[list[int]]:
    """Orbits of <theta, sigma, tau> on crosses, ordered by minimal cross."""
    n = 4 * p.m
    uf = _UnionFind(n)
    for x in range(n):
        uf.union(x, x ^ 1)
        uf.union(x, x ^ 2)
        uf.union(x, p.tau[x])
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(uf.find(x), []).append(x)
    return [groups[r] for r in sorted(groups)]


def _connected_params(p: Premap, crosses: list[int]) -> MapParams:
    """Parameters of one connected component given its cross set."""
    v = len(tau_cycles(p.tau, crosses)) // 2
    phi = p.phi_images()
    f = len(tau_cycles(phi, crosses)) // 2
    e = len(crosses) // 4
    # Orientable iff <theta sigma, tau> has two orbits on the component.
    uf = _UnionFind(4 * p.m)
    for x in crosses:
        uf.union(x, x ^ 3)
        uf.union(x, p.tau[x])
    orbits = len({uf.find(x) for x in crosses})
    orientable = orbits == 2
    chi = v - e + f
    s = 2 - chi
    gbar = s // 2 if orientable else -s
    return _fill_params(v, e, f, 1, orientable, gbar)


def _fill_params(v: int, e: int, f: int, k: int, orientable: bool, gbar: int) -> MapParams:
    chi = v - e + f
    s = 2 * k - chi
    r = v - k
    n = e - r
    rstar = f - k
    nstar = e - rstar
    return MapParams(
        v=v, e=e, f=f, k=k, chi=chi, s=s, gbar=gbar,
        orientable=orientable, r=r, n=n, rstar=rstar, nstar=nstar,
    )


_ISOLATED_PARAMS = MapParams(
    v=1, e=0, f=1, k=1, chi=2, s=0, gbar=0, orientable=True,
    r=0, n=0, rstar=0, nstar=0,
)


def component_params(p: Premap) -> list[MapParams]:
    """Per-component parameters; isolated vertices last."""
    out = [_connected_params(p, crosses) for crosses in _component_cross_sets(p)]
    out.extend([_ISOLATED_PARAMS] * p.isolated_vertices)
    return out


def map_params(p: Premap) -> MapParams:
    """Parameters of the whole map (additive over components)."""
    comps = component_params(p)
    v = sum(c.v for c in comps)
    e = sum(c.e for c in comps)
    f = sum(c.f for c in comps)
    k = len(comps)
    orientable = all(c.orientable for c in comps)
    gbar = sum(c.gbar for c in comps)
    return _fill_params(v, e, f, k, orientable, gbar)


def components(p: Premap) -> list[Premap]:
    """Split into connected premaps, crosses relabelled to the convention.

    Components are ordered by minimal original cross; each isolated vertex
    becomes a trailing single-vertex premap.
    """
    out = []
    for crosses in _component_cross_sets(p):
        edges = sorted({x // 4 for x in crosses})
        new_edge = {e: i for i, e in enumerate(edges)}
        relabel = {x: 4 * new_edge[x // 4] + (x & 3) for x in crosses}
        tau = [0] * (4 * len(edges))
        for x in crosses:
            tau[relabel[x]] = relabel[p.tau[x]]
        out.append(Premap(len(edges), tuple(tau)))
    out.extend(Premap(0, (), 1) for _ in range(p.isolated_vertices))
    return out


def canonical_form(p: Premap) -> Premap:
    """Deterministic relabelling: per-component BFS from the minimal cross.

    Edge ids are assigned in order of first visit; each cross keeps its role
    (id mod 4).  Two premaps that differ only by edge order, or by the order
    in which components appear, share a canonical form.  This is not an
    isomorphism test: within-edge role choices are preserved, not normalized.
    """
    inv = [0] * (4 * p.m)
    for x, y in enumerate(p.tau):
        inv[y] = x
    blocks: list[tuple[int, ...]] = []
    for crosses in _component_cross_sets(p):
        queue = [min(crosses)]
        seen = set(queue)
        order = []
        while queue:
            x = queue.pop(0)
            order.append(x)
            for nxt in (x ^ 1, x ^ 2, x ^ 3, p.tau[x], inv[x]):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        edge_order: dict[int, int] = {}
        relabel: dict[int, int] = {}
        for x in order:
            e = x // 4
            if e not in edge_order:
                edge_order[e] = len(edge_order)
            relabel[x] = 4 * edge_order[e] + (x & 3)
        local = [0] * len(order)
        for x in order:
            local[relabel[x]] = relabel[p.tau[x]]
        blocks.append(tuple(local))
    # Component order is content-based so unions commute.
    blocks.sort()
    tau: list[int] = []
    for block in blocks:
        base = len(tau)
        tau.extend(base + y for y in block)
    return Premap(p.m, tuple(tau), p.isolated_vertices)


def equivalent(p: Premap, q: Premap) -> bool:
    """Equality of canonical forms (see canonical_form for the caveat)."""
    return canonical_form(p) == canonical_form(q)
