from itertools import combinations

import pytest
from hypothesis import given

from clutterbei.cliques import free_vertices, is_clique, is_free, maximal_cliques
from clutterbei.clutter import new_clutter
from clutterbei.errors import ComplexityGuard, UnknownVertex
from strategies import clutters

SIX = new_clutter(range(1, 7), [[1, 2, 4], [2, 4, 6], [4, 5], [1, 3, 6]])


def brute_facets(C):
    """Maximal vertex sets whose pairs are all covered by some hyperedge."""
    edges = [set(e) for e in C.edges]
    cliques = [
        frozenset(S)
        for k in range(1, C.n + 1)
        for S in combinations(range(C.n), k)
        if all(any({i, j} <= e for e in edges) for i, j in combinations(S, 2))
    ]
    return sorted((S for S in cliques if not any(S < U for U in cliques)), key=sorted)


def L(C, sets):
    return [C.sorted_labels(S) for S in sets]


def test_is_clique_examples():
    assert is_clique(SIX, ["1", "2", "4", "6"])
    assert all(is_clique(SIX, [x]) for x in SIX.labels)
    assert not is_clique(SIX, ["3", "5"])
    with pytest.raises(UnknownVertex):
        is_clique(SIX, ["9"])


def test_maximal_cliques_examples():
    assert L(SIX, maximal_cliques(SIX)) == [["1", "2", "4", "6"], ["1", "3", "6"], ["4", "5"]]
    K = new_clutter(range(1, 6), [range(1, 6)])
    assert L(K, maximal_cliques(K)) == [list("12345")]
    E = new_clutter([1, 2, 3], [])
    assert L(E, maximal_cliques(E)) == [["1"], ["2"], ["3"]]


def test_free_vertices_examples():
    assert SIX.sorted_labels(free_vertices(SIX)) == ["2", "3", "5"]
    K = new_clutter(range(1, 5), [range(1, 5)])
    assert free_vertices(K) == frozenset(range(4))
    P = new_clutter([1, 2, 3], [[1, 2], [2, 3]])
    assert P.sorted_labels(free_vertices(P)) == ["1", "3"]
    assert is_free(P, "1") and not is_free(P, "2")


def test_clique_budget():
    C = new_clutter(range(5), [])
    with pytest.raises(ComplexityGuard):
        maximal_cliques(C, max_vertices=4)


@given(clutters(max_n=8))
def test_facets_match_brute_force(C):
    facets = maximal_cliques(C)
    assert facets == brute_facets(C)
    assert all(is_clique(C, F) for F in facets)
    assert set().union(*facets) == set(range(C.n)) if C.n else facets == []
    assert all(not (F < G) for F in facets for G in facets)
