from __future__ import annotations

import pytest

from monosing.errors import AlgebraError
from monosing.quiver import (
    Arrow,
    Quiver,
    basic_cycle,
    connected_components,
    eliminate_sinks,
    eliminate_sources,
    find_cycle,
    has_oriented_cycle,
    is_basic_cycle,
    linear_quiver,
    union,
)


def test_rejects_duplicates_and_dangling_arrows():
    with pytest.raises(AlgebraError, match="INVALID_QUIVER"):
        Quiver(("v", "v"))
    with pytest.raises(AlgebraError, match="INVALID_QUIVER"):
        Quiver(("v",), (Arrow("x", "v", "v"), Arrow("x", "v", "v")))
    with pytest.raises(AlgebraError, match="INVALID_QUIVER"):
        Quiver(("v",), (Arrow("x", "v", "w"),))


def test_basic_cycles():
    for n in range(1, 6):
        z = basic_cycle(n)
        assert is_basic_cycle(z)
        assert len(z.arrows) == n
        assert has_oriented_cycle(z)
    assert not is_basic_cycle(linear_quiver(3))
    assert not has_oriented_cycle(linear_quiver(4))


def test_two_loops_at_one_vertex_is_not_basic():
    q = Quiver(("v",), (Arrow("x", "v", "v"), Arrow("y", "v", "v")))
    assert not is_basic_cycle(q)
    assert has_oriented_cycle(q)


def test_find_cycle_follows_arrows():
    q = Quiver(("a", "b", "c"), (Arrow("p", "a", "b"), Arrow("q", "b", "c"), Arrow("r", "c", "a")))
    cyc = find_cycle(q)
    assert cyc[0] == cyc[-1]
    assert len(cyc) == 4
    edges = {(a.source, a.target) for a in q.arrows}
    assert all((u, v) in edges for u, v in zip(cyc, cyc[1:]))
    assert find_cycle(linear_quiver(3)) is None


def test_components_sorted_and_full():
    q = union([basic_cycle(2, "z"), linear_quiver(2, "a")])
    comps = connected_components(q)
    assert [c.vertices for c in comps] == [("a1", "a2"), ("z0", "z1")]
    assert sum(len(c.arrows) for c in comps) == len(q.arrows)


def test_eliminate_sources_and_sinks_differ():
    # tail feeding into a 2-cycle: sources peel the tail, sinks remove nothing
    q = Quiver(
        ("g", "d", "x"),
        (Arrow("gd", "g", "d"), Arrow("dg", "d", "g"), Arrow("xd", "x", "d")),
    )
    assert eliminate_sources(q).vertices == ("g", "d")
    assert eliminate_sinks(q).same_shape(q)


def test_elimination_is_iterated():
    q = linear_quiver(4)
    assert eliminate_sources(q).vertices == ()
    assert eliminate_sinks(q).vertices == ()
