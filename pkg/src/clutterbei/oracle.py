"""Brute-force minimal primes, independent of the cut-point criterion.

Each candidate prime ``P_T`` is described by ``T`` and the partition of the
remaining vertices into connected components. Containment between two such
primes is decided from their generators: the variables ``x_i, y_i`` for
``i`` in ``T`` and the binomials ``f_ij`` for ``i, j`` in a common part.
This module deliberately avoids the bitset kernels and the associated graph
so that it stays a second, separately coded route to the minimal primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .clutter import Clutter
from .errors import ComplexityGuard, DescriptorMismatch

MAX_ORACLE_VERTICES = 12


@dataclass(frozen=True)
class PrimeDescriptor:
    labels: tuple[str, ...]
    T: frozenset[int]
    parts: tuple[frozenset[int], ...]
    height: int

    def label_T(self) -> frozenset[str]:
        return frozenset(self.labels[i] for i in self.T)


def _adjacency(C: Clutter) -> dict[int, set[int]]:
    # pair coverage straight from the hyperedges
    nbrs = {v: set() for v in range(C.n)}
    for e in C.edges:
        for i, j in combinations(e, 2):
            nbrs[i].add(j)
            nbrs[j].add(i)
    return nbrs


def _parts(nbrs, remaining: set[int]) -> list[frozenset[int]]:
    parts = []
    todo = set(remaining)
    while todo:
        start = min(todo)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w in todo and w not in seen:
                    seen.add(w)
                    stack.append(w)
        todo -= seen
        parts.append(frozenset(seen))
    parts.sort(key=min)
    return parts


def _describe(C, nbrs, T) -> PrimeDescriptor:
    parts = _parts(nbrs, set(range(C.n)) - T)
    height = sum(len(p) - 1 for p in parts) + 2 * len(T)
    return PrimeDescriptor(C.labels, frozenset(T), tuple(parts), height)


def describe_PT(C: Clutter, T) -> PrimeDescriptor:
    return _describe(C, _adjacency(C), C.vids(T))


def prime_contains(P: PrimeDescriptor, Q: PrimeDescriptor) -> bool:
    """Whether ``Q`` is contained in ``P``."""
    if P.labels != Q.labels:
        raise DescriptorMismatch("descriptors belong to different vertex sets")
    # x_i, y_i for i in T_Q lie in P only if i is in T_P
    if not Q.T <= P.T:
        return False
    owner = {v: k for k, part in enumerate(P.parts) for v in part}
    for part in Q.parts:
        # f_ij survives unless one end is in T_P or both ends share a part of P
        free = [v for v in part if v not in P.T]
        if len({owner[v] for v in free}) > 1:
            return False
    return True


def all_descriptors(C: Clutter) -> list[PrimeDescriptor]:
    nbrs = _adjacency(C)
    out = []
    for k in range(C.n + 1):
        for T in combinations(range(C.n), k):
            out.append(_describe(C, nbrs, frozenset(T)))
    return out


def minimal_primes_oracle(C: Clutter, max_vertices: int = MAX_ORACLE_VERTICES) -> list[PrimeDescriptor]:
    """Inclusion-minimal members of ``{P_T : T subset of V}``.

    Candidates are scanned by increasing ``|T|``. A strict containment
    ``Q < P`` forces ``T_Q < T_P``, so every prime strictly below a candidate
    has been seen already, and it suffices to compare against the minimal
    primes found so far.
    """
    if C.n > max_vertices:
        raise ComplexityGuard("oracle", C.n, max_vertices, "--oracle budget")
    minimal: list[PrimeDescriptor] = []
    for P in all_descriptors(C):
        if not any(prime_contains(P, Q) for Q in minimal):
            minimal.append(P)
    minimal.sort(key=lambda d: (len(d.T), sorted(d.T)))
    return minimal
