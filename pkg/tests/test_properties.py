"""Property-based checks over random admissible presentations."""
from __future__ import annotations

import random
from itertools import product

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from monosing import oracle
from monosing.algebra import neighbor_set, validate
from monosing.corpus import random_presentation
from monosing.dsl import parse_spec, render
from monosing.errors import AlgebraError
from monosing.report import singularity_report
from monosing.stabilization import build_direct_system
from monosing.stable import (
    A,
    P,
    S,
    HomSpace,
    StableObject,
    compose,
    raw_syzygy,
    syzygy_morphism,
    syzygy_object,
)

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def algebras(draw, max_vertices=3, max_arrows=5):
    seed = draw(st.integers(0, 2**32 - 1))
    p = random_presentation(random.Random(seed), max_vertices, max_arrows)
    try:
        return validate(p)
    except AlgebraError:
        assume(False)


@st.composite
def algebra_and_objects(draw):
    a = draw(algebras())
    pool = [A(n) for n in a.quiver.arrow_names]
    gens = st.lists(st.sampled_from(pool), min_size=1, max_size=3)
    return a, StableObject.of(a, draw(gens)), StableObject.of(a, draw(gens))


@SETTINGS
@given(algebras())
def test_round_trip(a):
    assert parse_spec(render(a.presentation)) == a.presentation


@SETTINGS
@given(algebras())
def test_neighbor_sets_are_transitive(a):
    nonproj = [n for n in a.quiver.arrow_names if a.annihilating_arrows(n)]
    for x in nonproj:
        nx = neighbor_set(a, x)
        assert x in nx
        for y in nx:
            if y in nonproj:
                assert set(neighbor_set(a, y)) <= set(nx) | {y}


@SETTINGS
@given(algebra_and_objects())
def test_stable_hom_matches_oracle_on_sums(data):
    a, x, y = data
    assert HomSpace(x, y).dim == oracle.stable_hom_dim(oracle.realize(x), oracle.realize(y))


@SETTINGS
@given(algebra_and_objects())
def test_syzygy_is_additive(data):
    a, x, y = data
    assert syzygy_object(x + y) == syzygy_object(x) + syzygy_object(y)


@SETTINGS
@given(algebras(), st.data())
def test_dimension_bookkeeping(a, data):
    # 0 -> Omega M -> P(M) -> M -> 0 is exact, so dimensions add up
    pool = [A(n) for n in a.quiver.arrow_names] + [S(v) for v in a.quiver.vertices]
    pool += [P(v) for v in a.quiver.vertices]
    x = StableObject.of(a, data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4)))
    m = oracle.realize(x)
    cover, _ = oracle.projective_cover(m)
    assert cover.dim == m.dim + oracle.realize(raw_syzygy(x)).dim


@SETTINGS
@given(algebra_and_objects())
def test_syzygy_functor_on_bases(data):
    a, x, y = data
    hxy, hyx = HomSpace(x, y), HomSpace(y, x)
    for i, j in product(range(min(hxy.dim, 4)), range(min(hyx.dim, 4))):
        f, g = hxy.basis_morphism(i), hyx.basis_morphism(j)
        assert syzygy_morphism(compose(g, f)) == compose(syzygy_morphism(g), syzygy_morphism(f))


@SETTINGS
@given(algebra_and_objects())
def test_rank_tables_are_monotone(data):
    a, x, y = data
    ds = build_direct_system(x, y, 4)
    for row in ds.rank_table():
        assert all(p >= q for p, q in zip(row, row[1:]))


@SETTINGS
@given(algebras())
def test_hom_dimension_is_bilinear_in_multiplicities(a):
    for n, m in product(a.quiver.arrow_names, repeat=2):
        x, y = StableObject.of(a, [A(n)]), StableObject.of(a, [A(m)])
        base = HomSpace(x, y).dim
        x2 = StableObject(a, ((A(n), 2),))
        y3 = StableObject(a, ((A(m), 3),))
        assert HomSpace(x2, y3).dim == 6 * base


@SETTINGS
@given(algebras())
def test_report_invariants(a):
    rep = singularity_report(a)
    assert sum(c.size for c in rep.components) == len(a.quiver.arrows)
    assert rep.defect_quiver.is_subquiver_of(rep.relation_quiver)
