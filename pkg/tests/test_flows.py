from fractions import Fraction

import pytest

from corpus import BRIDGE, LP, LX, N2, T1, VERTEX, flows_corpus
from surfpoly import flows as F
from surfpoly.errors import BudgetExceeded, NotAbelian
from surfpoly.groups import catalog, zeta
from surfpoly.ops import dual
from surfpoly.premap import map_params, tau_cycles

Z2 = catalog("cyclic2")
Z3 = catalog("cyclic3")
Z4 = catalog("cyclic4")
K4 = catalog("product(cyclic2, cyclic2)")
Z6 = catalog("cyclic6")
S3 = catalog("symmetric3")
D8 = catalog("dihedral8")
Q8 = catalog("quaternion8")

SMALL_GROUPS = [Z2, Z3, Z4, K4, S3]
ABELIAN = [Z2, Z3, Z4, K4, Z6]


def test_brute_force_examples():
    assert F.brute_force_flows(LX, Z2, True) == 1
    assert F.brute_force_flows(LX, Z3, True) == 0
    assert F.brute_force_flows(LX, D8, True) == 5
    assert F.brute_force_flows(LX, Q8, True) == 1
    for n, g in ((2, Z2), (3, Z3), (4, Z4)):
        assert F.brute_force_flows(LP, g, True) == n - 1
    assert F.brute_force_tensions(LP, S3, False) == 1
    assert F.brute_force_tensions(LX, Z2, False) == 2
    assert F.brute_force_tensions(LX, Z3, False) == 1
    assert F.brute_force_tensions(T1, S3, False) == 18


def test_flow_tension_duality():
    for p in (LP, LX, BRIDGE, T1, N2):
        for g in SMALL_GROUPS:
            for nowhere in (True, False):
                assert F.brute_force_flows(dual(p), g, nowhere) == F.brute_force_tensions(
                    p, g, nowhere
                )


def test_closed_form_examples():
    assert F.tension_count_closed(LX, Z3) == 1
    assert F.tension_count_closed(LP, S3) == 1
    assert F.tension_count_closed(T1, S3) == 18
    assert F.tension_count_closed(VERTEX, S3) == 1


def test_formula_examples():
    assert F.flow_count_formula(LX, D8) == 5
    assert F.flow_count_formula(T1, S3) == 7
    for g in SMALL_GROUPS:
        assert F.flow_count_formula(BRIDGE, g) == 0
        assert F.brute_force_flows(BRIDGE, g, True) == 0


def test_tutte_evaluation_examples():
    assert F.flow_count_via_tutte(LX, Z2) == 1
    assert F.flow_count_via_tutte(LX, D8) == 5
    assert F.flow_count_via_tutte(LP, Z3) == 2


def test_three_way_sample():
    for p in (LP, LX, BRIDGE, T1, N2):
        for g in (Z3, D8, Q8):
            for kind in ("flows", "tensions"):
                for nowhere in (True, False):
                    values = {
                        m: F.count(p, g, kind, m, nowhere)
                        for m in ("brute", "formula", "tutte")
                    }
                    assert len(set(values.values())) == 1, (kind, nowhere, values)


def test_partition_identity():
    # Total tension count equals the sum of nowhere-identity counts over
    # all contraction minors.
    for p in (LP, LX, T1, N2):
        for g in (Z3, S3):
            total = F.tension_count_closed(p, g)
            assert F.all_tension_count_via_tutte(p, g) == total


def test_closed_form_matches_brute():
    for p in flows_corpus():
        if map_params(p).k != 1:
            continue
        for g in (Z2, Z4, S3):
            assert F.tension_count_closed(p, g) == F.brute_force_tensions(p, g, False)


def test_orientable_never_uses_negative_zeta():
    def poisoned(g, gbar):
        if gbar < 0:
            return Fraction(10**9)
        return zeta(g, gbar)

    for p in flows_corpus():
        if not map_params(p).orientable:
            continue
        for g in (Z3, D8):
            assert F.flow_count_formula(p, g) == F.flow_count_formula(
                p, g, zeta_fn=poisoned
            )


def test_abelian_corollary():
    assert F.abelian_flow_count(LX, Z4) == 1
    assert F.abelian_flow_count(LX, Z3) == 0
    assert F.abelian_flow_count(LP, Z2) == 1
    for p in (LP, LX, T1, N2, BRIDGE):
        for g in ABELIAN:
            assert F.abelian_flow_count(p, g) == F.brute_force_flows(p, g, True)
    with pytest.raises(NotAbelian):
        F.abelian_flow_count(LP, S3)


def test_budget():
    import surfpoly.builders as b

    wide = b.standard_bouquet(b.BouquetSpec(True, 0, 10))
    with pytest.raises(BudgetExceeded):
        F.brute_force_flows(wide, S3, True)


def test_cycle_start_invariance():
    # The product condition is conjugation-invariant: any rotation of the
    # checked cycles yields the same count.
    for p in (LX, T1, N2):
        cycles = F._representative_cycles(tau_cycles(p.tau), 2)
        rotated = [c[1:] + c[:1] if len(c) > 1 else c for c in cycles]
        value = lambda x, ge, gi: ge if x & 3 in (0, 1) else gi
        for g in (Z4, S3):
            base = F._count_assignments(p, g, cycles, value, True, F.BRUTE_BUDGET)
            assert base == F._count_assignments(p, g, rotated, value, True, F.BRUTE_BUDGET)
            assert base == F.brute_force_flows(p, g, True)
