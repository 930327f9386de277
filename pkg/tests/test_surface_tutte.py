from fractions import Fraction

import pytest

from corpus import BRIDGE, LP, LX, N2, T1, VERTEX, corpus_maps, genus_zero_maps
from surfpoly.builders import disjoint_union
from surfpoly.errors import NotConnected, SubsetCapExceeded
from surfpoly.invariants import (
    krushkal,
    q_poly,
    quasi_forest_counts,
    quasi_tree_count,
    renormalize,
    signed_s_poly,
    surface_tutte,
    tilde_tutte,
    tutte_of_underlying,
)
from surfpoly.kernel import engine
from surfpoly.ops import dual
from surfpoly.poly import A, B, Monomial, MultiPoly, Var, X, Y, Z, xg, yg
from surfpoly.premap import map_params


def term(coeff=1, **exps):
    symbols = {"x": X, "y": Y, "a": A, "b": B, "z": Z}
    table = {}
    for key, e in exps.items():
        if key in symbols:
            table[symbols[key]] = e
        else:
            fam, genus = key.split("_")
            table[(xg if fam == "xg" else yg)(int(genus.replace("m", "-")))] = e
    return MultiPoly.term(coeff, table)


def test_hand_computed_surface_tutte():
    assert surface_tutte(VERTEX) == term(xg_0=1, yg_0=1)
    assert surface_tutte(LP) == term(xg_0=1, yg_0=1) + term(y=1, xg_0=2, yg_0=1)
    assert surface_tutte(LX) == term(x=1, xg_m1=1, yg_0=1) + term(y=1, xg_0=1, yg_m1=1)
    assert surface_tutte(BRIDGE) == term(x=1, xg_0=1, yg_0=2) + term(xg_0=1, yg_0=1)


def test_hand_computed_specializations():
    assert tilde_tutte(LP) == term(xg_0=1, yg_0=1) + term(y=1, xg_0=2, yg_0=1)
    assert tilde_tutte(LX) == term(xg_m1=1, yg_0=1) + term(xg_0=1, yg_m1=1)
    assert tilde_tutte(VERTEX) == term(xg_0=1, yg_0=1)
    assert krushkal(BRIDGE) == term(x=1)
    assert krushkal(LP) == term() + term(y=1)
    assert krushkal(LX) == term(a=1) + term(y=1, b=1)
    assert q_poly(BRIDGE) == term(x=1) + term()
    assert q_poly(LP) == term() + term(y=1)
    assert q_poly(LX) == term(a=1) + term(b=1)
    assert tutte_of_underlying(BRIDGE) == term(x=1)
    assert tutte_of_underlying(LP) == term(y=1)
    assert tutte_of_underlying(LX) == term(y=1)
    assert signed_s_poly(BRIDGE) == term(x=1)
    assert signed_s_poly(LP) == term(y=1)
    assert signed_s_poly(LX) == term(z=1)


def _swap_families(t: MultiPoly) -> MultiPoly:
    swapped = {"x": "y", "y": "x", "xg": "yg", "yg": "xg"}
    out = {}
    for m, c in t.terms.items():
        out[Monomial.make([(Var(swapped[v.tag], v.genus), e) for v, e in m.powers])] = c
    return MultiPoly(out)


def test_duality_swap():
    for p in corpus_maps(30):
        assert surface_tutte(dual(p)) == _swap_families(surface_tutte(p))


def test_multiplicativity():
    maps = [LP, LX, BRIDGE, T1, VERTEX]
    for p in maps:
        for q in maps:
            u = disjoint_union([p, q])
            assert surface_tutte(u) == surface_tutte(p) * surface_tutte(q)


def test_contribution_count():
    for p in corpus_maps(30):
        total = sum(surface_tutte(p).terms.values())
        assert total == 1 << p.m


def test_plane_reduction():
    # Genus-0 maps: the surface polynomial collapses onto the classical
    # Tutte polynomial via x -> yg(0)*x + 1, y -> xg(0)*y + 1.
    for p in genus_zero_maps():
        k = map_params(p).k
        t = tutte_of_underlying(p)
        rule = {
            X: term(yg_0=1, x=1) + term(),
            Y: term(xg_0=1, y=1) + term(),
        }
        expected = term(xg_0=k, yg_0=k) * t.substitute(rule)
        assert surface_tutte(p) == expected


def test_tilde_two_routes():
    for p in corpus_maps(50):
        assert tilde_tutte(p) == renormalize(surface_tutte(p))


def test_krushkal_and_signed_routes_run():
    # Both operations compare two computation routes internally.
    for p in corpus_maps(25):
        krushkal(p)
        signed_s_poly(p)


def test_tutte_matches_krushkal_specialization():
    # The classical Tutte polynomial is the Krushkal polynomial at a=b=1
    # with y shifted by one.
    for p in corpus_maps(25):
        k = krushkal(p)
        shifted = k.substitute({Y: term(y=1) - term(), A: term(), B: term()})
        assert shifted == tutte_of_underlying(p)


def test_subset_cap():
    import surfpoly.builders as b

    big = b.standard_bouquet(b.BouquetSpec(True, 0, 21))
    with pytest.raises(SubsetCapExceeded):
        surface_tutte(big)
    small = b.standard_bouquet(b.BouquetSpec(True, 0, 3))
    with pytest.raises(SubsetCapExceeded):
        surface_tutte(small, max_edges=2)


def _quasi_tree_oracle(p, hbar):
    eng = engine(p)
    count = 0
    for mask in range(1 << p.m):
        _, res = eng.profile(mask)
        if len(res[3]) == 1 and res[2] == 1 and res[3][0][0] == hbar:
            count += 1
    return count


def test_quasi_tree_counts():
    assert quasi_tree_count(LX, -1) == 1
    assert quasi_tree_count(LX, 0) == 1
    assert quasi_tree_count(LX, 1) == 0
    assert quasi_tree_count(LP, 0) == 1
    for p in [LP, LX, BRIDGE, T1, N2] + [q for q in corpus_maps(40) if map_params(q).k == 1]:
        gbar = map_params(p).gbar
        for hbar in range(-abs(gbar) - 1, abs(gbar) + 2):
            expected = _quasi_tree_oracle(p, hbar) if abs(hbar) <= abs(gbar) else 0
            assert quasi_tree_count(p, hbar) == expected, (p, hbar)
    with pytest.raises(NotConnected):
        quasi_tree_count(disjoint_union([LP, LX]), 0)


def _quasi_forest_oracle(p):
    eng = engine(p)
    forests = bouquets = 0
    for mask in range(1 << p.m):
        con, res = eng.profile(mask)
        if all(c[3] == 1 for c in res[3]):
            forests += 1
        if all(c[1] == 1 for c in con[3]):
            bouquets += 1
    return forests, bouquets


def test_quasi_forest_counts():
    assert quasi_forest_counts(LP) == (1, 2)
    assert quasi_forest_counts(LX) == (2, 2)
    assert quasi_forest_counts(VERTEX) == (1, 1)
    for p in corpus_maps(30):
        assert quasi_forest_counts(p) == _quasi_forest_oracle(p)


def test_coefficients_nonnegative():
    for p in corpus_maps(30):
        assert all(c > 0 for c in surface_tutte(p).terms.values())
        assert all(c > 0 for c in tilde_tutte(p).terms.values())
