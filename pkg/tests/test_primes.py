import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clutterbei.cliques import facet_of, free_vertices
from clutterbei.clutter import components, delete_vertex, new_clutter
from clutterbei.errors import ComplexityGuard, UnknownVertex
from clutterbei.primes import (
    component_count,
    cut_sets,
    dim_SJ,
    has_cutpoint_property,
    height_PT,
    is_unmixed,
    minimal_primes,
    unmixed_by_counts,
    unmixed_by_heights,
)
from helpers import all_graphs, random_small_clutter
from strategies import clutters

DATA = Path(__file__).parent / "data"
SIX = new_clutter(range(1, 7), [[1, 2, 4], [2, 4, 6], [4, 5], [1, 3, 6]])
PATH3 = new_clutter([1, 2, 3], [[1, 2], [2, 3]])
STAR = new_clutter([1, 2, 3, 4], [[1, 2], [1, 3], [1, 4]])


def K(n):
    return new_clutter(range(1, n + 1), [range(1, n + 1)])


def Ts(C, recs):
    return [C.sorted_labels(r.T) for r in recs]


def test_component_count_examples():
    assert component_count(SIX, ["4"]) == 2
    assert component_count(SIX, []) == 1
    assert component_count(SIX, SIX.labels) == 0
    with pytest.raises(UnknownVertex):
        component_count(SIX, ["x"])


def test_cutpoint_property_examples():
    assert has_cutpoint_property(SIX, ["4"])
    assert not has_cutpoint_property(SIX, ["1"])
    assert has_cutpoint_property(SIX, [])


def test_cut_sets_examples():
    for n in (1, 3, 5):
        assert Ts(K(n), cut_sets(K(n))) == [[]]
    assert Ts(PATH3, cut_sets(PATH3)) == [[], ["2"]]


def test_cut_sets_six_golden():
    golden = json.loads((DATA / "six_cut_sets.json").read_text())
    got = [{"T": SIX.sorted_labels(r.T), "c": r.c, "height": r.height, "dim": r.codim_dim}
           for r in cut_sets(SIX)]
    assert got == golden


def test_heights_and_dimension():
    assert height_PT(SIX, []) == 5
    for n in (1, 2, 4, 6):
        assert dim_SJ(K(n)) == n + 1
    assert height_PT(SIX, ["4"]) == 5


def test_minimal_primes_examples():
    (p,) = minimal_primes(K(4))
    assert p.T == frozenset() and p.height == 3
    (q,) = minimal_primes(new_clutter([1, 2, 3, 4], [[1, 2], [3, 4]]))
    assert q.T == frozenset() and len(q.parts) == 2 and q.height == 2
    assert [(sorted(d.T), d.height) for d in minimal_primes(PATH3)] == [([], 2), ([1], 2)]


def test_unmixed_examples():
    assert is_unmixed(K(4))
    assert is_unmixed(PATH3)
    assert not is_unmixed(STAR)
    assert not is_unmixed(SIX)


def test_enumeration_budget():
    C = new_clutter(range(6), [])
    with pytest.raises(ComplexityGuard):
        cut_sets(C, max_vertices=5)
    with pytest.raises(ComplexityGuard):
        is_unmixed(new_clutter(range(6), [range(6)]), max_vertices=5)


@given(clutters(max_n=8))
def test_record_invariants(C):
    n = C.n
    for r in cut_sets(C):
        assert r.height == n + len(r.T) - r.c
        assert r.codim_dim == 2 * n - r.height == n - len(r.T) + r.c
        for i in r.T:
            assert component_count(C, r.T - {i}) < r.c


@given(clutters(max_n=8))
def test_dimension_lower_bound(C):
    kappa = component_count(C)
    assert dim_SJ(C) >= n_plus(C, kappa)


def n_plus(C, kappa):
    return C.n + kappa


@given(clutters(max_n=8))
def test_unmixed_routes_agree(C):
    u = is_unmixed(C)
    assert u == unmixed_by_heights(C) == unmixed_by_counts(C)


@given(clutters(max_n=8))
def test_disconnected_dimension_is_sum(C):
    parts = components(C)
    assert dim_SJ(C) == sum(dim_SJ(H) for H in parts)


def test_non_free_iff_in_some_cut_set():
    def check(C):
        free = free_vertices(C)
        covered = set().union(*(r.T for r in cut_sets(C)))
        assert covered == set(range(C.n)) - free

    for n in range(1, 6):
        for C in all_graphs(n):
            check(C)
    rng = random.Random(33)
    for _ in range(300):
        check(random_small_clutter(rng, max_n=8))


@settings(max_examples=200)
@given(clutters(max_n=8, min_n=1), st.data())
def test_free_vertex_deletion_law(C, data):
    free = sorted(free_vertices(C))
    if not free:
        return
    v = data.draw(st.sampled_from(free))
    F = facet_of(C, v)
    lab = C.labels[v]
    D = delete_vertex(C, v)
    cut_C = {C.label_set(r.T) for r in cut_sets(C)}
    cut_D = {D.label_set(r.T) for r in cut_sets(D)}
    for bitsT in range(1 << C.n):
        T = {i for i in range(C.n) if bitsT >> i & 1}
        if F - {v} <= T:
            continue
        labels = C.label_set(T)
        assert (labels in cut_C) == (lab not in labels and labels in cut_D)
