"""Clique complex of a clutter: cliques, facets (maximal cliques), free vertices.

Everything is computed on the associated graph, whose cliques are exactly the
cliques of the clutter.
"""

from __future__ import annotations

from itertools import combinations

from .clutter import Clutter, bits
from .errors import ComplexityGuard

MAX_CLIQUE_VERTICES = 64


def is_clique(C: Clutter, D) -> bool:
    """True iff every pair of distinct members of ``D`` lies in a common edge."""
    ids = sorted(C.vids(D))
    adj = C.graph.adj
    return all(adj[i] >> j & 1 for i, j in combinations(ids, 2))


def _bron_kerbosch(adj, r, p, x, out):
    if not p and not x:
        out.append(r)
        return
    # pivot maximizing |p & N(u)| keeps the branching small
    pivot = max(bits(p | x), key=lambda u: (p & adj[u]).bit_count())
    for v in bits(p & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def maximal_cliques(C: Clutter, max_vertices: int = MAX_CLIQUE_VERTICES) -> list[frozenset[int]]:
    """Facets of the clique complex, sorted by their sorted id lists.

    Isolated vertices come out as singleton facets.
    """
    if C.n > max_vertices:
        raise ComplexityGuard("maximal clique enumeration", C.n, max_vertices)
    if C.n == 0:
        return []
    found: list[int] = []
    _bron_kerbosch(C.graph.adj, 0, C.full, 0, found)
    facets = [frozenset(bits(m)) for m in found]
    facets.sort(key=sorted)
    return facets


def facet_membership(C: Clutter, facets=None) -> list[int]:
    """Number of facets containing each vertex."""
    if facets is None:
        facets = maximal_cliques(C)
    counts = [0] * C.n
    for F in facets:
        for v in F:
            counts[v] += 1
    return counts


def free_vertices(C: Clutter, facets=None) -> frozenset[int]:
    """Vertices lying in exactly one facet."""
    return frozenset(v for v, k in enumerate(facet_membership(C, facets)) if k == 1)


def is_free(C: Clutter, v, facets=None) -> bool:
    return C.vid(v) in free_vertices(C, facets)


def facet_of(C: Clutter, v, facets=None) -> frozenset[int]:
    """The unique facet through a free vertex ``v``."""
    v = C.vid(v)
    if facets is None:
        facets = maximal_cliques(C)
    owners = [F for F in facets if v in F]
    if len(owners) != 1:
        raise ValueError(f"vertex {C.labels[v]!r} is not free")
    return owners[0]
