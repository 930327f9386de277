import pytest

from corpus import BRIDGE, LP, LX, VERTEX, corpus_maps
from surfpoly.builders import (
    BouquetSpec,
    HalfEdge,
    RotationSystem,
    disjoint_union,
    from_rotation_system,
    standard_bouquet,
)
from surfpoly.errors import MalformedRotation, ParseError, SpecOutOfRange, ValidationError
from surfpoly.premap import Premap, canonical_form, equivalent, map_params, validate_premap
from surfpoly.serialize import parse_map, serialize_map


def _loop(sign: int) -> RotationSystem:
    return RotationSystem(1, ((HalfEdge(0, 0), HalfEdge(0, 1)),), (sign,))


def test_rotation_examples():
    assert from_rotation_system(_loop(1)) == LP
    assert from_rotation_system(_loop(-1)) == LX
    two = RotationSystem(1, ((HalfEdge(0, 0),), (HalfEdge(0, 1),)), (1,))
    assert from_rotation_system(two) == BRIDGE


def test_rotation_validation():
    with pytest.raises(MalformedRotation):
        from_rotation_system(RotationSystem(1, ((HalfEdge(0, 0),),), (1,)))
    dup = RotationSystem(1, ((HalfEdge(0, 0), HalfEdge(0, 0), HalfEdge(0, 1)),), (1,))
    with pytest.raises(MalformedRotation):
        from_rotation_system(dup)
    with pytest.raises(MalformedRotation):
        from_rotation_system(RotationSystem(1, ((HalfEdge(0, 0), HalfEdge(0, 1)),), (2,)))


def test_rotation_output_valid_and_signs():
    for p in corpus_maps(60):
        assert validate_premap(p).ok
    # All-positive signs embed orientably.
    rs = RotationSystem(
        2,
        ((HalfEdge(0, 0), HalfEdge(1, 0), HalfEdge(0, 1), HalfEdge(1, 1)),),
        (1, 1),
    )
    assert map_params(from_rotation_system(rs)).orientable
    # A negative edge on a cycle is unbalanced, hence non-orientable.
    neg_loop = from_rotation_system(_loop(-1))
    assert not map_params(neg_loop).orientable
    # A negative bridge has no cycle through it: still orientable.
    neg_bridge = RotationSystem(1, ((HalfEdge(0, 0),), (HalfEdge(0, 1),)), (-1,))
    assert map_params(from_rotation_system(neg_bridge)).orientable
    # Two negative edges forming a digon: balanced, orientable.
    digon = RotationSystem(
        2,
        ((HalfEdge(0, 0), HalfEdge(1, 0)), (HalfEdge(1, 1), HalfEdge(0, 1))),
        (-1, -1),
    )
    assert map_params(from_rotation_system(digon)).orientable
    # Same digon with one negative edge: unbalanced, non-orientable.
    digon_mixed = RotationSystem(
        2,
        ((HalfEdge(0, 0), HalfEdge(1, 0)), (HalfEdge(1, 1), HalfEdge(0, 1))),
        (-1, 1),
    )
    assert not map_params(from_rotation_system(digon_mixed)).orientable


def test_standard_bouquets():
    t1 = standard_bouquet(BouquetSpec(True, 1, 2))
    mp = map_params(t1)
    assert (mp.v, mp.f, mp.s, mp.gbar, mp.orientable) == (1, 1, 2, 1, True)
    assert standard_bouquet(BouquetSpec(False, 1, 1)) == LX
    assert standard_bouquet(BouquetSpec(True, 0, 0)) == VERTEX
    for orientable in (True, False):
        for g in range(0 if orientable else 1, 4):
            for m in range(2 * g if orientable else g, 9):
                p = standard_bouquet(BouquetSpec(orientable, g, m))
                mp = map_params(p)
                assert validate_premap(p).ok
                assert mp.v == 1 and mp.e == m
                assert mp.orientable == orientable
                assert mp.s == (2 * g if orientable else g)
                assert mp.f == (m - 2 * g + 1 if orientable else m - g + 1)


def test_bouquet_rejects_out_of_range():
    with pytest.raises(SpecOutOfRange):
        standard_bouquet(BouquetSpec(True, 2, 3))
    with pytest.raises(SpecOutOfRange):
        standard_bouquet(BouquetSpec(False, 0, 2))


def test_disjoint_union():
    u = disjoint_union([LP, LX])
    mp = map_params(u)
    assert (mp.e, mp.k) == (2, 2)
    assert disjoint_union([]) == Premap(0, ())
    assert disjoint_union([BRIDGE]) == BRIDGE


def test_roundtrip_premap_format():
    for p in corpus_maps(60):
        text = serialize_map(p)
        again = parse_map(text)
        assert equivalent(again, p)
        assert serialize_map(again) == text


def test_serialize_injective_on_canonical_forms():
    seen = {}
    for p in corpus_maps(80):
        c = canonical_form(p)
        text = serialize_map(c)
        if text in seen:
            assert seen[text] == c
        seen[text] = c


def test_parse_rotation_format():
    text = (
        '{"format": "rotation-v1", "edges": 1, "isolated_vertices": 0,'
        ' "signs": ["+"], "vertices": [["0.0"], ["0.1"]]}'
    )
    assert parse_map(text) == BRIDGE
    loop = text.replace('"vertices": [["0.0"], ["0.1"]]', '"vertices": [["0.0", "0.1"]]')
    twisted = loop.replace('"+"', '"−"')
    assert parse_map(loop) == LP
    assert parse_map(twisted) == LX
    assert parse_map(twisted.replace("−", "-")) == LX


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_map("not json")
    with pytest.raises(ParseError):
        parse_map('{"format": "premap-v1", "edges": 1, "isolated_vertices": 0, "tau": [[0, 5]]}')
    with pytest.raises(ParseError):
        parse_map(
            '{"format": "premap-v1", "edges": 0, "isolated_vertices": 0, "tau": [],'
            ' "extra": 1}'
        )
    with pytest.raises(ValidationError):
        parse_map(
            '{"format": "premap-v1", "edges": 1, "isolated_vertices": 0,'
            ' "tau": [[0, 2], [1, 3]]}'
        )
