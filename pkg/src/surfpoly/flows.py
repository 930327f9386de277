"""Counting local G-flows and G-tensions: brute force, the subset-sum
formula with genus zeta factors, and surface Tutte evaluation.

A flow assigns a group element g_e to every edge; the value carried by a
cross is g_e on roles 0 and 1 (the two theta-related side-end positions)
and g_e^{-1} on roles 2 and 3.  The flow condition asks that the ordered
product along one tau-cycle of each vertex pair is the identity; the
sigma-reversed partner cycle is then automatic.  Tensions are the same
along phi-cycles with the role pattern (0, 2 -> g_e; 1, 3 -> g_e^{-1}),
equivalently flows of the dual map.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable

from .errors import BudgetExceeded, MethodDisagreement, NotAbelian, SubsetCapExceeded
from .groups import FiniteGroup, involution_count, zeta
from .invariants import SUBSET_CAP
from .kernel import engine
from .ops import contract, delete, dual
from .poly import Var, X, Y
from .premap import Premap, component_params, map_params, tau_cycles

__all__ = [
    "BRUTE_BUDGET",
    "brute_force_flows",
    "brute_force_tensions",
    "tension_count_closed",
    "flow_count_formula",
    "tension_count_formula",
    "flow_count_via_tutte",
    "tension_count_via_tutte",
    "all_flow_count_via_tutte",
    "all_tension_count_via_tutte",
    "abelian_flow_count",
    "count",
]

BRUTE_BUDGET = 10**7


def _check_budget(p: Premap, g: FiniteGroup, budget: int) -> None:
    if g.order**p.m > budget:
        raise BudgetExceeded(
            f"{g.order}^{p.m} assignments exceed the brute-force budget {budget}"
        )


def _representative_cycles(cycles: list[list[int]], partner_xor: int) -> list[list[int]]:
    """One cycle per reversal pair: the one whose minimum beats its partner's."""
    return [c for c in cycles if min(c) < min(x ^ partner_xor for x in c)]


def _count_assignments(
    p: Premap,
    g: FiniteGroup,
    cycles: list[list[int]],
    cross_value: Callable[[int, int, int], int],
    nowhere_identity: bool,
    budget: int,
) -> int:
    _check_budget(p, g, budget)
    elements = range(1, g.order) if nowhere_identity else range(g.order)
    total = 0
    for assignment in itertools.product(elements, repeat=p.m):
        ok = True
        for cyc in cycles:
            prod = 0
            for x in cyc:
                e = x >> 2
                prod = g.mul(prod, cross_value(x, assignment[e], g.inverse(assignment[e])))
            if prod != 0:
                ok = False
                break
        if ok:
            total += 1
    return total


def brute_force_flows(
    p: Premap, g: FiniteGroup, nowhere_identity: bool, budget: int = BRUTE_BUDGET
) -> int:
    cycles = _representative_cycles(tau_cycles(p.tau), 2)
    return _count_assignments(
        p, g, cycles,
        lambda x, ge, gi: ge if x & 3 in (0, 1) else gi,
        nowhere_identity, budget,
    )


def brute_force_tensions(
    p: Premap, g: FiniteGroup, nowhere_identity: bool, budget: int = BRUTE_BUDGET
) -> int:
    """Counted directly along phi-cycles and, as a cross-check, as flows of
    the dual; the two must agree."""
    cycles = _representative_cycles(tau_cycles(p.phi_images()), 1)
    direct = _count_assignments(
        p, g, cycles,
        lambda x, ge, gi: ge if x & 3 in (0, 2) else gi,
        nowhere_identity, budget,
    )
    via_dual = brute_force_flows(dual(p), g, nowhere_identity, budget)
    if direct != via_dual:
        raise MethodDisagreement(
            f"tension count {direct} differs from dual flow count {via_dual}"
        )
    return direct


def tension_count_closed(p: Premap, g: FiniteGroup) -> int:
    """All local tensions: per component |G|^{n*-1} * zeta(G, gbar), multiplied."""
    total = Fraction(1)
    for comp in component_params(p):
        total *= Fraction(g.order) ** (comp.nstar - 1) * zeta(g, comp.gbar)
    assert total.denominator == 1
    return int(total)


def flow_count_formula(
    p: Premap,
    g: FiniteGroup,
    max_edges: int | None = None,
    zeta_fn: Callable[[FiniteGroup, int], Fraction] | None = None,
) -> int:
    """Nowhere-identity flows by inclusion-exclusion over spanning submaps:
    sum of (-1)^{|Aᶜ|} |G|^{|A|-|V|} times the zeta factor of every
    component of M\\Aᶜ.  ``zeta_fn`` replaces the zeta table (used by tests
    to show non-orientable values are never consulted on orientable maps)."""
    cap = SUBSET_CAP if max_edges is None else max_edges
    if p.m > cap:
        raise SubsetCapExceeded(p.m, cap)
    zf = zeta_fn or zeta
    v_m = map_params(p).v
    eng = engine(p)
    order = Fraction(g.order)
    total = Fraction(0)
    for mask in range(1 << p.m):
        _, res = eng.profile(mask)
        edges_kept = res[1]
        term = (-1) ** (p.m - edges_kept) * order ** (edges_kept - v_m)
        for comp in res[3]:
            term *= zf(g, comp[0])
        total += term
    assert total.denominator == 1
    return int(total)


def tension_count_formula(
    p: Premap, g: FiniteGroup, max_edges: int | None = None
) -> int:
    return flow_count_formula(dual(p), g, max_edges)


def _flow_evaluation(p: Premap, g: FiniteGroup, swapped: bool, max_edges: int | None) -> int:
    from .invariants import surface_tutte

    t = surface_tutte(p, max_edges)
    order = Fraction(g.order)

    def family(v: Var) -> Fraction | None:
        tag = v.tag
        if swapped:
            tag = {"xg": "yg", "yg": "xg"}[tag]
        if tag == "xg":
            return Fraction(1)
        if tag == "yg":
            return -zeta(g, v.genus) / order
        return None

    if swapped:
        assignment = {X: -order, Y: Fraction(1)}
    else:
        assignment = {X: Fraction(1), Y: -order}
    value = t.evaluate(assignment, family=family)
    params = map_params(p)
    sign = -1 if (params.e - (params.v if not swapped else params.f)) % 2 else 1
    result = sign * value
    assert result.denominator == 1
    return int(result)


def flow_count_via_tutte(p: Premap, g: FiniteGroup, max_edges: int | None = None) -> int:
    """(-1)^{e-v} times the surface Tutte polynomial at x=1, xg=1, y=-|G|,
    yg(k) = -zeta(G,k)/|G|."""
    return _flow_evaluation(p, g, swapped=False, max_edges=max_edges)


def tension_count_via_tutte(p: Premap, g: FiniteGroup, max_edges: int | None = None) -> int:
    """(-1)^{e-f} times the same evaluation with the x and y families swapped."""
    return _flow_evaluation(p, g, swapped=True, max_edges=max_edges)


def _all_count_by_partition(
    p: Premap, remove: Callable[[Premap, int], Premap], count_nowhere: Callable[[Premap], int]
) -> int:
    """Total count as the sum of nowhere-identity counts over minors.

    A flow supported on A restricts to a nowhere-identity flow of the
    deletion minor keeping A; dually, tensions partition over contractions.
    """
    total = 0
    for mask in range(1 << p.m):
        q = p
        removed = 0
        for e in range(p.m):
            if mask >> e & 1:
                q = remove(q, e - removed)
                removed += 1
        total += count_nowhere(q)
    return total


def all_flow_count_via_tutte(p: Premap, g: FiniteGroup, max_edges: int | None = None) -> int:
    return _all_count_by_partition(
        p, delete, lambda q: flow_count_via_tutte(q, g, max_edges)
    )


def all_tension_count_via_tutte(p: Premap, g: FiniteGroup, max_edges: int | None = None) -> int:
    return _all_count_by_partition(
        p, contract, lambda q: tension_count_via_tutte(q, g, max_edges)
    )


def abelian_flow_count(p: Premap, g: FiniteGroup, max_edges: int | None = None) -> int:
    """Nowhere-identity flows for abelian G, from the two-parameter form
    (2^d, m) with |G| = 2^d * m and 2^d the number of involutions."""
    if not g.is_abelian():
        raise NotAbelian(f"group of order {g.order} is not abelian")
    cap = SUBSET_CAP if max_edges is None else max_edges
    if p.m > cap:
        raise SubsetCapExceeded(p.m, cap)
    two_d = involution_count(g)
    rest = g.order // two_d
    v_m = map_params(p).v
    eng = engine(p)
    total = Fraction(0)
    for mask in range(1 << p.m):
        _, res = eng.profile(mask)
        k_res = len(res[3])
        k_o = sum(1 for c in res[3] if c[0] >= 0)
        total += (
            (-1) ** (p.m - res[1])
            * Fraction(two_d) ** (res[1] - v_m + k_res)
            * Fraction(rest) ** (res[1] - v_m + k_o)
        )
    assert total.denominator == 1
    return int(total)


def count(
    p: Premap,
    g: FiniteGroup,
    kind: str,
    method: str,
    nowhere_identity: bool,
    max_edges: int | None = None,
) -> int:
    """Dispatch table used by the CLI; kind is 'flows' or 'tensions',
    method is 'brute', 'formula' or 'tutte'."""
    if kind not in ("flows", "tensions"):
        raise ValueError(f"unknown kind {kind!r}")
    if method == "brute":
        f = brute_force_flows if kind == "flows" else brute_force_tensions
        return f(p, g, nowhere_identity)
    if method == "formula":
        if nowhere_identity:
            f = flow_count_formula if kind == "flows" else tension_count_formula
            return f(p, g, max_edges)
        if kind == "tensions":
            return tension_count_closed(p, g)
        return tension_count_closed(dual(p), g)
    if method == "tutte":
        table = {
            ("flows", True): flow_count_via_tutte,
            ("tensions", True): tension_count_via_tutte,
            ("flows", False): all_flow_count_via_tutte,
            ("tensions", False): all_tension_count_via_tutte,
        }
        return table[(kind, nowhere_identity)](p, g, max_edges)
    raise ValueError(f"unknown method {method!r}")
