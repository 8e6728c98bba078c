"""Clutters, their associated graphs, and the constructions defined on them.

Vertices carry string labels externally and dense integer ids internally.
Ids follow the canonical label order (numeric labels by value, then the
rest lexicographically), so two clutters with the same labels and edges are
equal as values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from . import kernels
from .errors import (
    DuplicateLabel,
    EmptyEdge,
    FormatError,
    LabelCollision,
    NotAnAntichain,
    UnknownLabelInEdge,
    UnknownVertex,
)


def label_key(label: str):
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def maximal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    """Inclusion-maximal members of ``sets``, duplicates and empty sets removed."""
    uniq = sorted({s for s in sets if s}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s < k for k in kept):
            kept.append(s)
    return kept


@dataclass(frozen=True)
class Binomial:
    """The generator ``x_i*y_j - x_j*y_i`` for vertex ids ``i < j``."""

    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError(f"binomial needs i < j, got ({self.i}, {self.j})")


@dataclass(frozen=True)
class Graph:
    """Simple graph stored as one neighbour bitmask per vertex."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @classmethod
    def from_edges(cls, labels, edges) -> Graph:
        adj = [0] * len(labels)
        for i, j in edges:
            if i == j:
                raise ValueError("self-loop")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(tuple(labels), tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.edges()]

    def components(self, mask: int | None = None) -> list[int]:
        return kernels.component_masks(self.adj, self.full if mask is None else mask)

    def component_count(self, mask: int | None = None) -> int:
        return kernels.count_components(self.adj, self.full if mask is None else mask)

    def is_connected(self) -> bool:
        return self.component_count() <= 1

    def is_complete(self) -> bool:
        return all(self.adj[i] | (1 << i) == self.full for i in range(self.n))

    def induced(self, ids: Iterable[int]) -> Graph:
        keep = sorted(set(ids))
        pos = {v: k for k, v in enumerate(keep)}
        edges = [(pos[i], pos[j]) for i, j in self.edges() if i in pos and j in pos]
        return Graph.from_edges([self.labels[v] for v in keep], edges)

    def delete(self, v: int) -> Graph:
        return self.induced(i for i in range(self.n) if i != v)

    def relabel_edges(self) -> set[frozenset[str]]:
        return {frozenset(e) for e in self.edge_labels()}

    def same_as(self, other: Graph) -> bool:
        return set(self.labels) == set(other.labels) and self.relabel_edges() == other.relabel_edges()

    def union(self, other: Graph) -> Graph:
        labels = sorted(set(self.labels) | set(other.labels), key=label_key)
        pos = {lab: k for k, lab in enumerate(labels)}
        edges = {tuple(sorted(pos[x] for x in e)) for e in self.relabel_edges() | other.relabel_edges()}
        return Graph.from_edges(labels, edges)

    def cone(self, apex: str) -> Graph:
        if apex in self.labels:
            raise LabelCollision(f"apex {apex!r} already a vertex")
        labels = sorted(self.labels + (apex,), key=label_key)
        pos = {lab: k for k, lab in enumerate(labels)}
        edges = [(pos[a], pos[b]) for a, b in self.edge_labels()]
        edges += [(pos[apex], pos[lab]) for lab in self.labels]
        return Graph.from_edges(labels, edges)


@dataclass(frozen=True)
class Clutter:
    """A vertex set together with an antichain of nonempty edges.

    ``edges`` holds frozensets of vertex ids, sorted by their sorted id lists.
    Use :func:`new_clutter` to build one from labels.
    """

    labels: tuple[str, ...]
    edges: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def graph(self) -> Graph:
        return associated_graph(self)

    def vid(self, v) -> int:
        """Vertex id of ``v``; strings are labels, integers are ids."""
        if isinstance(v, str):
            try:
                return self.index[v]
            except KeyError:
                raise UnknownVertex(f"no vertex labelled {v!r}") from None
        if isinstance(v, int) and 0 <= v < self.n:
            return v
        raise UnknownVertex(f"no vertex with id {v!r}")

    def vids(self, vs: Iterable) -> frozenset[int]:
        return frozenset(self.vid(v) for v in vs)

    def mask(self, vs: Iterable) -> int:
        return to_mask(self.vids(vs))

    def label_set(self, ids: Iterable[int]) -> frozenset[str]:
        return frozenset(self.labels[i] for i in ids)

    def sorted_labels(self, ids: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(ids)]

    def edge_labels(self) -> list[list[str]]:
        return [self.sorted_labels(e) for e in self.edges]

    def edge_label_sets(self) -> set[frozenset[str]]:
        return {self.label_set(e) for e in self.edges}

    def __repr__(self):
        edges = ", ".join("{" + ",".join(e) + "}" for e in self.edge_labels())
        return f"Clutter(vertices=[{','.join(self.labels)}], edges=[{edges}])"


def _build(labels: Iterable[str], label_edges: Iterable[Iterable[str]]) -> Clutter:
    """Canonicalize already-validated input and take maximal edges."""
    ordered = sorted(labels, key=label_key)
    pos = {lab: k for k, lab in enumerate(ordered)}
    edges = maximal_sets(frozenset(pos[x] for x in e) for e in label_edges)
    edges.sort(key=sorted)
    return Clutter(tuple(ordered), tuple(edges))


def _from_ids(C: Clutter, keep: Iterable[int], id_edges: Iterable[Iterable[int]]) -> Clutter:
    labels = [C.labels[i] for i in keep]
    return _build(labels, ([C.labels[i] for i in e] for e in id_edges))


def new_clutter(labels: Iterable, raw_edges: Iterable[Iterable] = (), minimize: bool = False) -> Clutter:
    """Build a canonical clutter from vertex labels and edges given as label sets.

    With ``minimize`` edges contained in other edges are dropped; without it
    such a containment raises :class:`NotAnAntichain`. Repeated edges collapse.
    """
    labels = [str(x) for x in labels]
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"label {lab!r} appears twice")
        seen.add(lab)
    edges = []
    for raw in raw_edges:
        e = frozenset(str(x) for x in raw)
        if not e:
            raise EmptyEdge("edges must be nonempty")
        unknown = e - seen
        if unknown:
            raise UnknownLabelInEdge(f"edge {sorted(e)} uses unknown labels {sorted(unknown)}")
        edges.append(e)
    uniq = set(edges)
    if not minimize:
        for a in uniq:
            for b in uniq:
                if a < b:
                    raise NotAnAntichain(f"edge {sorted(a)} is contained in {sorted(b)}")
    return _build(labels, uniq)


def associated_graph(C: Clutter) -> Graph:
    """Graph on the same vertices joining every pair that shares an edge."""
    adj = [0] * C.n
    for e in C.edges:
        m = to_mask(e)
        for i in e:
            adj[i] |= m
    return Graph(C.labels, tuple(a & ~(1 << i) for i, a in enumerate(adj)))


def binomial_generators(C: Clutter) -> frozenset[Binomial]:
    return frozenset(Binomial(i, j) for e in C.edges for i, j in combinations(sorted(e), 2))


def generator_lines(C: Clutter) -> list[str]:
    """Generators as ``x{i}*y{j} - x{j}*y{i}`` lines, sorted by id pair."""
    out = []
    for b in sorted(binomial_generators(C), key=lambda b: (b.i, b.j)):
        i, j = C.labels[b.i], C.labels[b.j]
        out.append(f"x{i}*y{j} - x{j}*y{i}")
    return out


def component_ids(C: Clutter) -> list[frozenset[int]]:
    return [frozenset(bits(m)) for m in C.graph.components()]


def is_connected(C: Clutter) -> bool:
    return C.graph.is_connected()


def components(C: Clutter) -> list[Clutter]:
    """Connected components as clutters, ordered by their smallest vertex."""
    return [induced(C, part) for part in component_ids(C)]


def delete_vertex(C: Clutter, v) -> Clutter:
    v = C.vid(v)
    return _from_ids(C, (i for i in range(C.n) if i != v), (e - {v} for e in C.edges))


def induced(C: Clutter, T: Iterable) -> Clutter:
    """Clutter on the kept vertex set ``T`` with edges the maximal traces ``e & T``."""
    keep = C.vids(T)
    return _from_ids(C, sorted(keep), (e & keep for e in C.edges))


def union(C1: Clutter, C2: Clutter) -> Clutter:
    """Union over shared labels; edges are the maximal ones of both families."""
    return _build(set(C1.labels) | set(C2.labels), C1.edge_label_sets() | C2.edge_label_sets())


def disjoint_union(C1: Clutter, C2: Clutter) -> Clutter:
    clash = set(C1.labels) & set(C2.labels)
    if clash:
        raise LabelCollision(f"labels shared by both clutters: {sorted(clash, key=label_key)}")
    return _build(C1.labels + C2.labels, C1.edge_label_sets() | C2.edge_label_sets())


def cone(v: str, D: Clutter) -> Clutter:
    """Add a fresh apex ``v`` joined by a 2-edge to every vertex of ``D``.

    Singleton edges ``{i}`` of ``D`` are swallowed by ``{v, i}``; nothing else
    can be contained in a new edge.
    """
    v = str(v)
    if v in D.index:
        raise LabelCollision(f"apex {v!r} is already a vertex")
    new = [frozenset((v, lab)) for lab in D.labels]
    return _build(D.labels + (v,), new + list(D.edge_label_sets()))


def is_clutter_cone(C: Clutter, v, D: Clutter | None = None) -> bool:
    """Whether ``C`` is literally ``cone(v, D)``; ``D`` defaults to ``C`` minus ``v``."""
    lab = C.labels[C.vid(v)]
    if D is None:
        D = induced(C, [i for i in range(C.n) if C.labels[i] != lab])
    if lab in D.index:
        return False
    return cone(lab, D) == C


def is_cut_point(C: Clutter, v) -> bool:
    v = C.vid(v)
    g = C.graph
    return g.component_count(g.full & ~(1 << v)) > g.component_count()


def cut_points(C: Clutter) -> frozenset[int]:
    return frozenset(v for v in range(C.n) if is_cut_point(C, v))


def is_complete(C: Clutter) -> bool:
    return C.graph.is_complete()


# --- file format ---------------------------------------------------------


def to_dict(C: Clutter) -> dict:
    return {"vertices": list(C.labels), "edges": C.edge_labels()}


def from_dict(data) -> Clutter:
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError('expected an object with "vertices" and "edges"')
    vertices, edges = data["vertices"], data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise FormatError('"vertices" and "edges" must be lists')
    if any(not isinstance(e, list) for e in edges):
        raise FormatError("each edge must be a list of labels")
    for x in vertices + [x for e in edges for x in e]:
        if not isinstance(x, (str, int)) or isinstance(x, bool):
            raise FormatError(f"labels must be strings, got {x!r}")
    return new_clutter(vertices, edges)


def dumps(C: Clutter) -> str:
    return json.dumps(to_dict(C)) + "\n"


def loads(text: str) -> Clutter:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def read_clutter(path) -> Clutter:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_clutter(C: Clutter, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(C))
