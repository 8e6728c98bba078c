"""Cut sets, minimal primes, heights, Krull dimension and unmixedness.

For ``T`` a vertex set write ``c(T)`` for the number of connected components
of the associated graph after deleting ``T``. The prime ``P_T`` has height
``n + |T| - c(T)`` and is a minimal prime exactly when ``T`` has the
cut-point property: ``T`` is empty or every ``i`` in ``T`` satisfies
``c(T - {i}) < c(T)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import kernels
from .clutter import Clutter, bits, components
from .errors import ComplexityGuard
from .oracle import PrimeDescriptor

MAX_ENUM_VERTICES = 24


@dataclass(frozen=True)
class CutSetRecord:
    T: frozenset[int]
    c: int
    height: int
    codim_dim: int


def _record(n: int, T: frozenset[int], c: int) -> CutSetRecord:
    height = n + len(T) - c
    return CutSetRecord(T, c, height, 2 * n - height)


def component_count(C: Clutter, T=()) -> int:
    return C.graph.component_count(C.full & ~C.mask(T))


def has_cutpoint_property(C: Clutter, T) -> bool:
    t = C.mask(T)
    g = C.graph
    c = g.component_count(C.full & ~t)
    return all(g.component_count(C.full & ~(t ^ (1 << i))) < c for i in bits(t))


def height_PT(C: Clutter, T) -> int:
    T = C.vids(T)
    return C.n + len(T) - component_count(C, T)


def _guard(C: Clutter, max_vertices: int):
    if C.n > max_vertices:
        raise ComplexityGuard("cut-set enumeration", C.n, max_vertices, "--max-enum-vertices")


def cut_sets(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1) -> list[CutSetRecord]:
    """Every ``T`` with the cut-point property, ordered by size then lexicographically."""
    _guard(C, max_vertices)
    found = kernels.cut_set_masks(C.graph.adj, C.n, threads)
    recs = [_record(C.n, frozenset(bits(t)), c) for t, c in found]
    recs.sort(key=lambda r: (len(r.T), sorted(r.T)))
    return recs


def dim_SJ(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1, records=None) -> int:
    """Krull dimension of ``S/J``: the largest ``n - |T| + c(T)`` over cut sets."""
    if records is None:
        records = cut_sets(C, max_vertices, threads)
    return max(r.codim_dim for r in records)


def minimal_primes(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1) -> list[PrimeDescriptor]:
    g = C.graph
    out = []
    for r in cut_sets(C, max_vertices, threads):
        rest = C.full & ~sum(1 << i for i in r.T)
        parts = tuple(frozenset(bits(m)) for m in g.components(rest))
        out.append(PrimeDescriptor(C.labels, r.T, parts, r.height))
    return out


def heights_histogram(records) -> dict[int, int]:
    return dict(sorted(Counter(r.height for r in records).items()))


def unmixed_by_heights(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1) -> bool:
    """All minimal primes have one height."""
    return len({r.height for r in cut_sets(C, max_vertices, threads)}) == 1


def unmixed_by_counts(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1) -> bool:
    """``c(T) = |T| + k`` for every cut set, ``k`` the number of components.

    With ``k = 1`` this is the usual criterion for connected clutters.
    """
    k = C.graph.component_count()
    return all(r.c == len(r.T) + k for r in cut_sets(C, max_vertices, threads))


def is_unmixed(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1) -> bool:
    """Unmixed iff every connected component ``H`` has ``c(T) = |T| + 1`` on its cut sets."""
    for H in components(C):
        _guard(H, max_vertices)
        if not all(r.c == len(r.T) + 1 for r in cut_sets(H, max_vertices, threads)):
            return False
    return True
