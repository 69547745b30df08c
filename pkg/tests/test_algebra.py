from __future__ import annotations

import pytest

from monosing.algebra import (
    MonomialPresentation,
    Path,
    arrow_module_basis,
    composability_graph,
    is_projective_arrow_module,
    neighbor_set,
    projective_basis,
    right_ideal_basis,
    validate,
)
from monosing.errors import AlgebraError
from monosing.quiver import Arrow, Quiver


def test_two_loops_basis(loops):
    assert [str(p) for p in loops.nonzero_paths] == ["e_v", "x", "y", "x.y"]
    assert loops.dimension == 4


def test_glued_cycles_basis(glued):
    assert glued.dimension == 11
    longest = glued.paths_by_length[2]
    assert sorted(str(p) for p in longest) == ["beta.delta", "gamma.alpha"]
    assert 3 not in glued.paths_by_length


def test_multiply_convention(loops):
    x, y = loops.arrow_path("x"), loops.arrow_path("y")
    assert str(loops.multiply(x, y)) == "x.y"  # y first, then x
    assert loops.multiply(y, x) is None
    assert loops.multiply(x, x) is None
    e = loops.trivial_path("v")
    assert loops.multiply(e, x) == x == loops.multiply(x, e)


def test_path_str():
    assert str(Path("v", "v", ())) == "e_v"
    assert str(Path("1", "3", ("alpha", "gamma"))) == "gamma.alpha"


def test_neighbor_sets(loops, glued):
    assert neighbor_set(loops, "x") == ("x",)
    assert neighbor_set(loops, "y") == ("x", "y")
    assert neighbor_set(glued, "alpha") == ("alpha",)
    assert neighbor_set(glued, "gamma") == ("gamma", "xi")
    assert neighbor_set(glued, "xi") == ("gamma", "xi")


def test_right_ideal(loops):
    assert [str(p) for p in right_ideal_basis(loops, "y")] == ["x", "y", "x.y"]
    assert [str(p) for p in right_ideal_basis(loops, "x")] == ["x", "x.y"]


def test_projective_arrow_modules(glued):
    # every arrow of this quiver is killed by some arrow
    assert not any(is_projective_arrow_module(glued, n) for n in glued.quiver.arrow_names)
    hereditary = validate(
        MonomialPresentation(Quiver(("1", "2", "3"), (Arrow("a", "1", "2"), Arrow("b", "2", "3"))))
    )
    assert is_projective_arrow_module(hereditary, "a")
    with pytest.raises(AlgebraError, match="PROJECTIVE_ARROW_MODULE"):
        neighbor_set(hereditary, "a")


def test_module_bases(glued):
    assert [str(p) for p in arrow_module_basis(glued, "alpha")] == ["alpha", "gamma.alpha"]
    assert [str(p) for p in projective_basis(glued, "2")] == ["e_2", "beta", "gamma"]
    with pytest.raises(AlgebraError, match="UNKNOWN_VERTEX"):
        projective_basis(glued, "9")


def test_free_loop_is_rejected():
    p = MonomialPresentation(Quiver(("v",), (Arrow("x", "v", "v"),)))
    with pytest.raises(AlgebraError) as info:
        validate(p)
    assert info.value.code == "INFINITE_DIMENSIONAL"
    assert info.value.details["cycle"] == ["x", "x"]


def test_longer_cycle_is_named():
    q = Quiver(("1", "2", "3"), (Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "1")))
    with pytest.raises(AlgebraError) as info:
        validate(MonomialPresentation(q))
    cycle = info.value.details["cycle"]
    assert cycle[0] == cycle[-1]
    assert len(cycle) == 4
    # consecutive arrows compose: t(first) = s(second)
    for u, v in zip(cycle, cycle[1:]):
        assert q.arrow(u).target == q.arrow(v).source


def test_one_relation_breaks_the_cycle():
    q = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")))
    a = validate(MonomialPresentation(q, (("b", "a"),)))
    assert sorted(str(p) for p in a.paths_by_length[2]) == ["a.b"]


def test_composability_graph(loops):
    g = composability_graph(loops.presentation)
    assert {(e.source, e.target) for e in g.arrows} == {("y", "x")}


def test_presentation_errors():
    q = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2")))
    with pytest.raises(AlgebraError, match="NON_COMPOSABLE_RELATION"):
        MonomialPresentation(q, (("b", "a"),))
    with pytest.raises(AlgebraError, match="UNKNOWN_ARROW"):
        MonomialPresentation(q, (("c", "a"),))
    loop = Quiver(("v",), (Arrow("x", "v", "v"),))
    with pytest.raises(AlgebraError, match="DUPLICATE_DECLARATION"):
        MonomialPresentation(loop, (("x", "x"), ("x", "x")))


def test_radical_square_zero(loops, kx2):
    assert kx2.is_radical_square_zero
    assert not loops.is_radical_square_zero
