from fractions import Fraction

import pytest

from surfpoly.errors import BudgetExceeded, UnknownGroup, ValidationError
from surfpoly.groups import (
    FiniteGroup,
    catalog,
    conjugacy_class_count,
    group_from_table,
    involution_count,
    validate_group,
    zeta,
)
from surfpoly.serialize import parse_group_json, serialize_group_json

CATALOG = {
    "cyclic2": catalog("cyclic2"),
    "cyclic3": catalog("cyclic(3)"),
    "cyclic4": catalog("cyclic4"),
    "klein": catalog("product(cyclic(2), cyclic(2))"),
    "cyclic6": catalog("cyclic6"),
    "s3": catalog("symmetric3"),
    "d8": catalog("dihedral8"),
    "q8": catalog("quaternion8"),
    "s4": catalog("symmetric(4)"),
    "d12": catalog("dihedral(12)"),
}


def test_catalog_groups_valid():
    for name, g in CATALOG.items():
        assert validate_group(g.table).ok, name
        assert g.mul(0, 1 % g.order) == 1 % g.order


def test_catalog_properties():
    assert CATALOG["cyclic4"].is_abelian()
    assert CATALOG["klein"].is_abelian()
    assert not CATALOG["d8"].is_abelian()
    assert CATALOG["s4"].order == 24
    assert catalog("product(cyclic2, cyclic2, cyclic2)").order == 8
    with pytest.raises(UnknownGroup):
        catalog("nonsense")
    with pytest.raises(UnknownGroup):
        catalog("symmetric(5)")
    with pytest.raises(UnknownGroup):
        catalog("dihedral7")


def test_validate_rejects_corrupted():
    table = [list(row) for row in CATALOG["cyclic3"].table]
    table[1][1] = 1
    report = validate_group(table)
    assert not report.ok
    with pytest.raises(ValidationError):
        group_from_table(table)


def test_zeta_sanity():
    for name, g in CATALOG.items():
        assert zeta(g, 0) == g.order, name
        assert zeta(g, 1) == conjugacy_class_count(g), name
        assert zeta(g, -1) == involution_count(g), name
        for gbar in range(-2, 3):
            scaled = zeta(g, gbar) * Fraction(g.order) ** (2 * abs(gbar))
            assert scaled.denominator == 1 and scaled >= 0, (name, gbar)


def test_zeta_examples():
    assert zeta(CATALOG["d8"], 1) == 5
    assert zeta(CATALOG["d8"], -1) == 6
    assert zeta(CATALOG["q8"], -1) == 2
    assert zeta(CATALOG["s3"], 2) == Fraction(9, 4)


def test_zeta_abelian_two_torsion():
    for name in ("cyclic2", "cyclic3", "cyclic4", "klein", "cyclic6"):
        g = CATALOG[name]
        count = involution_count(g)
        assert count & (count - 1) == 0  # power of two
        assert zeta(g, -1) == count


def test_zeta_budget():
    big = catalog("product(cyclic10, cyclic10)")
    with pytest.raises(BudgetExceeded):
        zeta(big, 1)


def test_group_json_roundtrip():
    g = CATALOG["d8"]
    text = serialize_group_json([list(r) for r in g.table])
    table = parse_group_json(text)
    assert group_from_table(table) == g
    with pytest.raises(Exception):
        parse_group_json('{"format": "group-v1", "order": 2, "table": [[0, 1]]}')
