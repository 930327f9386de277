import pytest

from corpus import BRIDGE, LP, LX, N2, T1, VERTEX, corpus_maps
from surfpoly.builders import disjoint_union
from surfpoly.kernel import available_backends, backend_name, engine
from surfpoly.premap import Premap

HAS_C = "c" in available_backends()


def test_backend_reported():
    assert backend_name() in available_backends()


def test_python_profile_shapes():
    eng = engine(LX, "python")
    con, res = eng.profile(0)
    # Empty subset: M/A = M, restriction is the bare vertex.
    assert con == (1, 1, 1, ((-1, 1, 1, 1),))
    assert res == (1, 0, 1, ((0, 1, 0, 1),))
    con, res = eng.profile(1)
    assert con == (1, 0, 1, ((0, 1, 0, 1),))
    assert res == (1, 1, 1, ((-1, 1, 1, 1),))


@pytest.mark.skipif(not HAS_C, reason="compiled engine not built")
def test_backend_parity():
    maps = [LP, LX, BRIDGE, T1, N2, VERTEX, disjoint_union([LP, LX, VERTEX])]
    maps += corpus_maps(40)
    for p in maps:
        py, c = engine(p, "python"), engine(p, "c")
        for mask in range(1 << p.m):
            assert py.profile(mask) == c.profile(mask), (p, mask)


@pytest.mark.skipif(not HAS_C, reason="compiled engine not built")
def test_env_override(monkeypatch):
    monkeypatch.setenv("SURFPOLY_BACKEND", "python")
    assert backend_name() == "python"
    assert engine(LP).backend == "python"
    monkeypatch.setenv("SURFPOLY_BACKEND", "c")
    assert backend_name() == "c"
    monkeypatch.setenv("SURFPOLY_BACKEND", "bogus")
    with pytest.raises(ValueError):
        backend_name()


def test_empty_map():
    for backend in available_backends():
        con, res = engine(Premap(0, ()), backend).profile(0)
        assert con == (0, 0, 0, ()) and res == (0, 0, 0, ())
