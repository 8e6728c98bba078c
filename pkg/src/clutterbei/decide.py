"""Structural recognizers and the rule-based Cohen-Macaulay verdict.

The verdict tries, in order:

R1  split into connected components
R2  complete clutter
R3  gluing at a vertex that is free on both sides
R4  graph cone whose base has exactly two connected components
R5  graph cone whose base has three or more components (never unmixed)
R6  chordal associated graph whose maximal cliques meet in at most one vertex
R7  not unmixed implies not Cohen-Macaulay

and otherwise answers ``Unknown``. Depth is propagated through the same
decompositions wherever a closed formula exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, NamedTuple, Optional, Sequence

from .cliques import facet_membership, is_free, maximal_cliques
from .clutter import (
    Clutter,
    Graph,
    bits,
    components,
    induced,
    is_complete,
    is_connected,
    union,
)
from .errors import BlocksDontCoverEdges, GlueVertexNotFree, LabelCollision, UnknownVertex
from .primes import MAX_ENUM_VERTICES, cut_sets, dim_SJ, is_unmixed

Chooser = Callable[[Sequence], object]


class Split(NamedTuple):
    v: str
    left: Clutter
    right: Clutter


class Apex(NamedTuple):
    v: str
    base: Clutter


def _gluing_candidates(C: Clutter) -> list[Split]:
    if C.n < 3 or not is_connected(C):
        return []
    g = C.graph
    out = []
    for v in range(C.n):
        bit = 1 << v
        parts = g.components(C.full & ~bit)
        # with three or more sides some side holds two components, and v
        # cannot be free there
        if len(parts) != 2:
            continue
        lab = C.labels[v]
        left = induced(C, bits(parts[0] | bit))
        right = induced(C, bits(parts[1] | bit))
        if is_free(left, lab) and is_free(right, lab):
            out.append(Split(lab, left, right))
    return out


def gluing_split(C: Clutter, choose: Optional[Chooser] = None) -> Optional[Split]:
    """Decompose a connected clutter as a gluing at a free vertex.

    Returns the split at the smallest eligible vertex, or the one picked by
    ``choose`` from all eligible splits.
    """
    cands = _gluing_candidates(C)
    if not cands:
        return None
    return choose(cands) if choose else cands[0]


def graph_cone_apex(C: Clutter, choose: Optional[Chooser] = None) -> Optional[Apex]:
    """A vertex adjacent to every other vertex, with the rest as base.

    Detection works on the associated graph, so clutters that are cones only
    at graph level are recognised too.
    """
    if C.n < 2:
        return None
    g = C.graph
    apexes = [v for v in range(C.n) if g.adj[v] == C.full & ~(1 << v)]
    if not apexes:
        return None
    v = choose(apexes) if choose else apexes[0]
    return Apex(C.labels[v], induced(C, (i for i in range(C.n) if i != v)))


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then a perfect-elimination check."""
    n = g.n
    weight = [0] * n
    unvisited = g.full
    order = []
    while unvisited:
        v = max(bits(unvisited), key=lambda u: weight[u])
        order.append(v)
        unvisited &= ~(1 << v)
        for u in bits(g.adj[v] & unvisited):
            weight[u] += 1
    # reverse visit order eliminates: neighbours visited earlier must form a clique
    earlier = 0
    for v in order:
        nb = g.adj[v] & earlier
        for u in bits(nb):
            if nb & ~(1 << u) & ~g.adj[u]:
                return False
        earlier |= 1 << v
    return True


def chordal_clique_case(C: Clutter, facets=None) -> Optional[bool]:
    """CM answer for chordal clutters whose facets pairwise share at most one vertex.

    Returns ``None`` when the clutter is outside that class.
    """
    if facets is None:
        facets = maximal_cliques(C)
    if not is_chordal(C.graph):
        return None
    if any(len(F & G) > 1 for F, G in combinations(facets, 2)):
        return None
    return max(facet_membership(C, facets), default=0) <= 2


# --- depth -----------------------------------------------------------------


@lru_cache(maxsize=4096)
def depth_exact(C: Clutter) -> Optional[int]:
    """Depth of ``S/J`` when the clutter decomposes into pieces of known depth.

    complete on m vertices: m + 1; disjoint union: sum; gluing: sum - 2;
    graph cone over a disconnected base on m vertices: min(depth(base), m + 2).
    """
    if C.n == 0:
        return 0
    parts = components(C)
    if len(parts) > 1:
        depths = [depth_exact(H) for H in parts]
        return None if None in depths else sum(depths)
    if is_complete(C):
        return C.n + 1
    split = gluing_split(C)
    if split is not None:
        a, b = depth_exact(split.left), depth_exact(split.right)
        return None if a is None or b is None else a + b - 2
    apex = graph_cone_apex(C)
    if apex is not None and not is_connected(apex.base):
        d = depth_exact(apex.base)
        return None if d is None else min(d, apex.base.n + 2)
    return None


# --- general gluing ---------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    block: Clutter

    def leaves(self):
        return [self.block]

    def vertices(self) -> frozenset[str]:
        return frozenset(self.block.labels)


@dataclass(frozen=True)
class Glue:
    v: str
    left: "GluingTree"
    right: "GluingTree"

    def leaves(self):
        return self.left.leaves() + self.right.leaves()

    def vertices(self) -> frozenset[str]:
        return self.left.vertices() | self.right.vertices()


GluingTree = Leaf | Glue


def glue(C1: Clutter, C2: Clutter, at: str) -> Clutter:
    """Union of two clutters meeting exactly in ``at``, free on both sides."""
    at = str(at)
    for C in (C1, C2):
        if at not in C.index:
            raise UnknownVertex(f"glue vertex {at!r} missing from {C!r}")
    shared = set(C1.labels) & set(C2.labels)
    if shared != {at}:
        raise LabelCollision(f"clutters share {sorted(shared)}, expected only {at!r}")
    for C in (C1, C2):
        if not is_free(C, at):
            raise GlueVertexNotFree(f"{at!r} is not a free vertex of {C!r}")
    return union(C1, C2)


def general_gluing_decomposition(C: Clutter, blocks: Sequence[Clutter]) -> Optional[GluingTree]:
    """Check that ``blocks`` glue to ``C`` along a tree and return that tree.

    Blocks must be connected, meet pairwise in at most one vertex, never
    three at a time, share only vertices free on both sides, and their
    intersection graph must be a tree.
    """
    if not blocks:
        raise BlocksDontCoverEdges("no blocks given")
    total = blocks[0]
    for B in blocks[1:]:
        total = union(total, B)
    if total != C:
        raise BlocksDontCoverEdges("the blocks do not reassemble the clutter")
    if not is_connected(C) or not all(is_connected(B) for B in blocks):
        return None
    r = len(blocks)
    verts = [set(B.labels) for B in blocks]
    links: dict[int, list[tuple[int, str]]] = {i: [] for i in range(r)}
    n_links = 0
    for i, j in combinations(range(r), 2):
        common = verts[i] & verts[j]
        if len(common) > 1:
            return None
        if common:
            (v,) = common
            if not (is_free(blocks[i], v) and is_free(blocks[j], v)):
                return None
            links[i].append((j, v))
            links[j].append((i, v))
            n_links += 1
    if any(verts[i] & verts[j] & verts[k] for i, j, k in combinations(range(r), 3)):
        return None
    if n_links != r - 1:
        return None

    seen = {0}

    def grow(i):
        node = Leaf(blocks[i])
        for j, v in links[i]:
            if j not in seen:
                seen.add(j)
                node = Glue(v, node, grow(j))
        return node

    tree = grow(0)
    return tree if len(seen) == r else None


def tree_depth(tree: GluingTree) -> Optional[int]:
    """Sum of block depths minus 2 per gluing."""
    leaves = tree.leaves()
    depths = [depth_exact(B) for B in leaves]
    if None in depths:
        return None
    return sum(depths) - 2 * (len(leaves) - 1)


# --- verdict ----------------------------------------------------------------


class Status(str, enum.Enum):
    CM = "CohenMacaulay"
    NOT_CM = "NotCohenMacaulay"
    UNKNOWN = "Unknown"


RESULTS = {
    "R1": "componentwise reduction (background fact)",
    "R2": "complete clutter: ideal of all 2-minors is Cohen-Macaulay",
    "R3": "gluing at a free vertex: CM iff both parts are CM",
    "R4": "cone over two connected components: CM iff both components are CM",
    "R5": "cone over three or more components is not unmixed",
    "R6": "chordal, cliques meet in at most one vertex: CM iff no vertex lies in three maximal cliques",
    "R7": "Cohen-Macaulay implies unmixed",
}


@dataclass
class Step:
    rule: str
    status: Status
    detail: str = ""
    children: list["Verdict"] = field(default_factory=list)

    @property
    def result(self) -> str:
        return RESULTS[self.rule]

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "result": self.result,
            "status": self.status.value,
            "detail": self.detail,
            "children": [c.to_dict() for c in self.children],
        }


@dataclass
class Verdict:
    status: Status
    unmixed: bool
    dim: int
    depth: Optional[int]
    certificate: list[Step]
    vertices: tuple[str, ...] = ()

    @property
    def decided(self) -> bool:
        return self.status is not Status.UNKNOWN

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "unmixed": self.unmixed,
            "dim": self.dim,
            "depth": self.depth,
            "vertices": list(self.vertices),
            "certificate": [s.to_dict() for s in self.certificate],
        }


def _combine(children: Sequence[Verdict]) -> Status:
    if any(c.status is Status.NOT_CM for c in children):
        return Status.NOT_CM
    if all(c.status is Status.CM for c in children):
        return Status.CM
    return Status.UNKNOWN


ALL_RULES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7")


def cm_verdict(C: Clutter, max_vertices: int = MAX_ENUM_VERTICES, threads: int = 1, rng=None,
               rules: Sequence[str] = ALL_RULES) -> Verdict:
    """Decide Cohen-Macaulayness by the first applicable rule among R1-R7.

    ``rng`` (a ``random.Random``) randomizes which gluing vertex or apex is
    used; the status never depends on it, only the certificate does.
    ``rules`` restricts the rules tried, which is only useful for checking
    one route against another.
    """
    choose = rng.choice if rng is not None else None
    records = cut_sets(C, max_vertices, threads)
    dim = dim_SJ(C, records=records)
    unmixed = is_unmixed(C, max_vertices, threads)

    def sub(H):
        return cm_verdict(H, max_vertices, threads, rng, rules)

    steps: list[Step] = []
    status = Status.UNKNOWN
    for names, rule in _RULES:
        if not set(names) & set(rules):
            continue
        step = rule(C, sub, choose, rules)
        if step is None:
            continue
        steps.append(step)
        if step.status is not Status.UNKNOWN:
            status = step.status
            break
    if status is Status.UNKNOWN and "R7" in rules:
        if not unmixed:
            status = Status.NOT_CM
            steps.append(Step("R7", status, "some minimal primes differ in height"))
        else:
            steps.append(Step("R7", Status.UNKNOWN, "unmixed, no rule decides"))
    return Verdict(status, unmixed, dim, depth_exact(C), steps, C.labels)


def _r1(C, sub, choose, rules):
    parts = components(C)
    if len(parts) < 2:
        return None
    children = [sub(H) for H in parts]
    return Step("R1", _combine(children), f"{len(parts)} components", children)


def _r2(C, sub, choose, rules):
    if not is_complete(C):
        return None
    return Step("R2", Status.CM, f"complete on {C.n} vertices")


def _r3(C, sub, choose, rules):
    split = gluing_split(C, choose)
    if split is None:
        return None
    children = [sub(split.left), sub(split.right)]
    return Step("R3", _combine(children), f"glued at {split.v}", children)


def _r45(C, sub, choose, rules):
    apex = graph_cone_apex(C, choose)
    if apex is None:
        return None
    parts = components(apex.base)
    if len(parts) == 2 and "R4" in rules:
        children = [sub(H) for H in parts]
        return Step("R4", _combine(children), f"apex {apex.v}", children)
    if len(parts) >= 3 and "R5" in rules:
        return Step("R5", Status.NOT_CM, f"apex {apex.v}, base has {len(parts)} components")
    return None


def _r6(C, sub, choose, rules):
    answer = chordal_clique_case(C)
    if answer is None:
        return None
    status = Status.CM if answer else Status.NOT_CM
    detail = "each vertex in at most two maximal cliques" if answer else "a vertex lies in three maximal cliques"
    return Step("R6", status, detail)


_RULES = ((("R1",), _r1), (("R2",), _r2), (("R3",), _r3), (("R4", "R5"), _r45), (("R6",), _r6))
