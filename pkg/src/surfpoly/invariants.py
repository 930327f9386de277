"""Surface Tutte polynomial and its specializations, by subset expansion.

Every operation walks all 2^m edge subsets A, profiling the contraction
minor M/A and the restriction M\\Aᶜ through the kernel engine.  The two
specializations with an independent second computation route (Krushkal and
the signed-graph polynomial) run both routes and insist on agreement.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MethodDisagreement, NotConnected, SubsetCapExceeded
from .kernel import engine
from .poly import A, B, Monomial, MultiPoly, Var, X, Y, Z, xg, yg
from .premap import Premap, map_params

__all__ = [
    "SUBSET_CAP",
    "surface_tutte",
    "tilde_tutte",
    "renormalize",
    "q_poly",
    "krushkal",
    "tutte_of_underlying",
    "signed_s_poly",
    "quasi_tree_count",
    "quasi_forest_counts",
]

SUBSET_CAP = 20


def _check_cap(p: Premap, max_edges: int | None) -> None:
    cap = SUBSET_CAP if max_edges is None else max_edges
    if p.m > cap:
        raise SubsetCapExceeded(p.m, cap)


def _euler_genus(side) -> int:
    v, e, f, comps = side
    return 2 * len(comps) - (v - e + f)


def _genus_weight(k: int) -> int:
    # Exponent of the half-genus carriers a, b for signed genus k.
    return 2 * k if k >= 0 else -k


def surface_tutte(p: Premap, max_edges: int | None = None) -> MultiPoly:
    """Sum over subsets of x^{n*(M/A)} y^{n(M\\Aᶜ)} times the genus factors."""
    _check_cap(p, max_edges)
    eng = engine(p)
    acc: dict[Monomial, int] = {}
    for mask in range(1 << p.m):
        con, res = eng.profile(mask)
        exps = [
            (X, con[1] - con[2] + len(con[3])),
            (Y, res[1] - res[0] + len(res[3])),
        ]
        exps += [(xg(c[0]), 1) for c in con[3]]
        exps += [(yg(c[0]), 1) for c in res[3]]
        m = Monomial.make(exps)
        acc[m] = acc.get(m, 0) + 1
    return MultiPoly(acc)


def tilde_tutte(p: Premap, max_edges: int | None = None) -> MultiPoly:
    """Renormalized form: exponents r(M/A) and r*(M\\Aᶜ) instead of nullities."""
    _check_cap(p, max_edges)
    eng = engine(p)
    acc: dict[Monomial, int] = {}
    for mask in range(1 << p.m):
        con, res = eng.profile(mask)
        exps = [
            (X, con[0] - len(con[3])),
            (Y, res[2] - len(res[3])),
        ]
        exps += [(xg(c[0]), 1) for c in con[3]]
        exps += [(yg(c[0]), 1) for c in res[3]]
        m = Monomial.make(exps)
        acc[m] = acc.get(m, 0) + 1
    return MultiPoly(acc)


def renormalize(t: MultiPoly) -> MultiPoly:
    """Apply xg(k) -> x^{-s(k)} xg(k), yg(k) -> y^{-s(k)} yg(k) to a surface
    Tutte polynomial; the result must be a true polynomial (it is tilde_tutte)."""
    rule: dict[Var, MultiPoly] = {}
    for v in t.variables():
        if v.tag == "xg":
            rule[v] = MultiPoly.term(1, {X: -_genus_weight(v.genus), v: 1})
        elif v.tag == "yg":
            rule[v] = MultiPoly.term(1, {Y: -_genus_weight(v.genus), v: 1})
    return t.substitute(rule)


def q_poly(p: Premap, max_edges: int | None = None) -> MultiPoly:
    """Quadrivariate form with Euler genus exponents on a and b."""
    _check_cap(p, max_edges)
    eng = engine(p)
    acc: dict[Monomial, int] = {}
    for mask in range(1 << p.m):
        con, res = eng.profile(mask)
        m = Monomial.make(
            [
                (X, con[0] - len(con[3])),
                (Y, res[2] - len(res[3])),
                (A, _euler_genus(con)),
                (B, _euler_genus(res)),
            ]
        )
        acc[m] = acc.get(m, 0) + 1
    return MultiPoly(acc)


def krushkal(p: Premap, max_edges: int | None = None) -> MultiPoly:
    """Krushkal polynomial; a and b carry half powers, so the stored exponent
    of a is the Euler genus s(M/A) itself (likewise b).

    Computed by direct subset expansion and, independently, by specializing
    the surface Tutte polynomial; disagreement is a hard error.
    """
    _check_cap(p, max_edges)
    k_m = map_params(p).k
    eng = engine(p)
    xm1 = MultiPoly.var(X) - 1
    powers = {0: MultiPoly.const(1)}
    direct = MultiPoly()
    for mask in range(1 << p.m):
        con, res = eng.profile(mask)
        dk = len(res[3]) - k_m
        if dk not in powers:
            powers[dk] = xm1**dk
        direct = direct + powers[dk] * MultiPoly.term(
            1,
            {
                Y: res[1] - res[0] + len(res[3]),
                A: _euler_genus(con),
                B: _euler_genus(res),
            },
        )
    t = surface_tutte(p, max_edges)
    rule: dict[Var, MultiPoly] = {X: MultiPoly.const(1)}
    for v in t.variables():
        if v.tag == "xg":
            rule[v] = MultiPoly.term(1, {A: _genus_weight(v.genus)})
        elif v.tag == "yg":
            rule[v] = xm1 * MultiPoly.term(1, {B: _genus_weight(v.genus)})
    via_tutte = t.substitute(rule)
    for _ in range(k_m):
        via_tutte = via_tutte.divide_linear(X, 1)
    if direct != via_tutte:
        raise MethodDisagreement(
            f"krushkal routes differ: direct {direct} vs specialization {via_tutte}"
        )
    return direct


def tutte_of_underlying(p: Premap, max_edges: int | None = None) -> MultiPoly:
    """Tutte polynomial of the underlying graph, via the surface polynomial."""
    t = surface_tutte(p, max_edges)
    rule: dict[Var, MultiPoly] = {
        X: MultiPoly.const(1),
        Y: MultiPoly.var(Y) - 1,
    }
    for v in t.variables():
        if v.tag == "xg":
            rule[v] = MultiPoly.const(1)
        elif v.tag == "yg":
            rule[v] = MultiPoly.var(X) - 1
    out = t.substitute(rule)
    for _ in range(map_params(p).k):
        out = out.divide_linear(X, 1)
    return out


def signed_s_poly(p: Premap, max_edges: int | None = None) -> MultiPoly:
    """Trivariate invariant of the underlying signed graph.

    Direct expansion uses the orientable-component count of M\\Aᶜ; the second
    route specializes the surface Tutte polynomial with the rational rule
    yg(k<=-1) -> (x-1)(z-1)/(y-1), clearing the denominator before dividing.
    """
    _check_cap(p, max_edges)
    params = map_params(p)
    eng = engine(p)
    xm1 = MultiPoly.var(X) - 1
    ym1 = MultiPoly.var(Y) - 1
    zm1 = MultiPoly.var(Z) - 1
    direct = MultiPoly()
    for mask in range(1 << p.m):
        _, res = eng.profile(mask)
        k_res = len(res[3])
        k_o = sum(1 for c in res[3] if c[0] >= 0)
        direct = direct + (
            xm1 ** (k_res - params.k)
            * ym1 ** (res[1] - params.v + k_o)
            * zm1 ** (k_res - k_o)
        )

    t = surface_tutte(p, max_edges)
    neg = [v for v in t.variables() if v.tag == "yg" and v.genus <= -1]
    top = max(
        (sum(m.exponent(v) for v in neg) for m in t.terms), default=0
    )
    numerator = MultiPoly()
    for m, c in t.terms.items():
        denom_power = sum(m.exponent(v) for v in neg)
        term = MultiPoly.const(c) * ym1 ** (top - denom_power)
        for v, e in m.powers:
            if v == X:
                continue
            if v == Y:
                term = term * ym1**e
            elif v.tag == "xg":
                continue
            elif v.genus >= 0:
                term = term * xm1**e
            else:
                term = term * (xm1 * zm1) ** e
        numerator = numerator + term
    for _ in range(top):
        numerator = numerator.divide_linear(Y, 1)
    for _ in range(params.k):
        numerator = numerator.divide_linear(X, 1)
    if direct != numerator:
        raise MethodDisagreement(
            f"signed-graph routes differ: direct {direct} vs specialization {numerator}"
        )
    return direct


def quasi_tree_count(p: Premap, hbar: int, max_edges: int | None = None) -> int:
    """Number of spanning quasi-trees (single-faced spanning submaps) of the
    given signed genus, read off the renormalized polynomial."""
    params = map_params(p)
    if params.k != 1:
        raise NotConnected(f"map has {params.k} components")
    if abs(hbar) > abs(params.gbar):
        return 0
    t = tilde_tutte(p, max_edges)

    def family(v: Var) -> Fraction | None:
        if v.tag == "xg":
            return Fraction(1)
        if v.tag == "yg":
            return Fraction(1 if v.genus == hbar else 0)
        return None

    value = t.evaluate({X: 0, Y: 0}, family=family)
    assert value.denominator == 1
    return int(value)


def quasi_forest_counts(p: Premap, max_edges: int | None = None) -> tuple[int, int]:
    """(number of A with M\\Aᶜ a quasi-forest, number with M/A all bouquets)."""
    q = q_poly(p, max_edges)
    forests = q.evaluate({X: 1, Y: 0, A: 1, B: 1})
    bouquets = q.evaluate({X: 0, Y: 1, A: 1, B: 1})
    assert forests.denominator == 1 and bouquets.denominator == 1
    return int(forests), int(bouquets)
