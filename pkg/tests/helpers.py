"""Instance generators shared by the test modules."""

import random
from itertools import combinations

from clutterbei.cliques import free_vertices
from clutterbei.clutter import Clutter, components, disjoint_union, is_connected, new_clutter, union
from clutterbei.decide import glue
from clutterbei.generate import random_clutter


def relabel(C: Clutter, mapping) -> Clutter:
    return new_clutter([mapping.get(x, x) for x in C.labels],
                       [[mapping.get(x, x) for x in e] for e in C.edge_labels()])


def prefixed(C: Clutter, prefix: str, keep=()) -> Clutter:
    return relabel(C, {x: prefix + x for x in C.labels if x not in keep})


def all_graphs(n: int):
    """Every simple graph on labels 1..n, as 2-uniform clutters."""
    labels = [str(i) for i in range(1, n + 1)]
    pairs = list(combinations(labels, 2))
    for code in range(1 << len(pairs)):
        yield new_clutter(labels, [p for k, p in enumerate(pairs) if code >> k & 1])


def random_small_clutter(rng: random.Random, max_n=8, max_arity=4) -> Clutter:
    """Random clutter with up to ``max_n`` vertices; may be disconnected, may hold singletons."""
    n = rng.randint(1, max_n)
    m = rng.randint(0, n + 2)
    labels = [str(i) for i in range(1, n + 1)]
    edges = [rng.sample(labels, rng.randint(1, min(max_arity, n))) for _ in range(m)]
    return new_clutter(labels, edges, minimize=True)


def random_connected(rng: random.Random, n: int, max_arity=3) -> Clutter:
    """Random connected clutter on labels 1..n."""
    labels = [str(i) for i in range(1, n + 1)]
    if n == 1:
        return new_clutter(labels, [])
    edges = [rng.sample(labels, rng.randint(2, min(max_arity, n))) for _ in range(rng.randint(1, n))]
    order = labels[:]
    rng.shuffle(order)
    # a random spanning tree keeps it connected
    for k in range(1, n):
        edges.append([order[k], order[rng.randrange(k)]])
    C = new_clutter(labels, edges, minimize=True)
    assert is_connected(C)
    return C


def random_with_free_vertex(rng, n, max_arity=3):
    while True:
        C = random_connected(rng, n, max_arity)
        free = sorted(free_vertices(C))
        if free:
            return C, C.labels[rng.choice(free)]


def random_gluing(rng: random.Random, max_total=10):
    """(C, C1, C2, v) with C the gluing of connected C1 and C2 at v."""
    n1 = rng.randint(1, max_total - 1)
    n2 = rng.randint(1, max_total + 1 - n1)
    C1, v = random_with_free_vertex(rng, n1)
    C2, w = random_with_free_vertex(rng, n2)
    C2 = relabel(prefixed(C2, "b", keep=()), {"b" + w: v})
    return glue(C1, C2, v), C1, C2, v


def random_components(rng: random.Random, k: int, max_total: int) -> list[Clutter]:
    """``k`` connected clutters with disjoint labels, total size at most ``max_total``."""
    sizes = [1] * k
    for _ in range(rng.randint(0, max_total - k)):
        sizes[rng.randrange(k)] += 1
    return [prefixed(random_connected(rng, s), chr(ord("a") + i)) for i, s in enumerate(sizes)]


def join(parts):
    D = parts[0]
    for P in parts[1:]:
        D = disjoint_union(D, P)
    return D


def clique_cover(rng: random.Random, members: list[str]) -> list[list[str]]:
    """Hyperedges inside ``members`` covering all of its pairs."""
    if len(members) <= 1:
        return [members]
    style = rng.randrange(3)
    if style == 0:
        return [members]
    if style == 1:
        return [list(p) for p in combinations(members, 2)]
    need = set(combinations(sorted(members), 2))
    out = []
    while need:
        a, b = rng.choice(sorted(need))
        extra = [x for x in members if x not in (a, b) and rng.random() < 0.5]
        e = sorted({a, b, *extra})
        out.append(e)
        need -= set(combinations(e, 2))
    return out


def random_block_clutter(rng: random.Random, max_n=10, max_blocks_per_vertex=None):
    """Clutter whose associated graph is a tree of cliques (a block graph).

    Returns the clutter and its blocks as label lists. With
    ``max_blocks_per_vertex=2`` no vertex lies in three blocks.
    """
    n = rng.randint(1, max_n)
    first = rng.randint(min(2, n), min(4, n))
    blocks = [[str(i) for i in range(1, first + 1)]]
    used = first
    count = {str(i): 1 for i in range(1, first + 1)}
    while used < n:
        hosts = [x for x in count if max_blocks_per_vertex is None or count[x] < max_blocks_per_vertex]
        if not hosts:
            break
        host = rng.choice(sorted(hosts))
        size = rng.randint(1, min(3, n - used))
        new = [str(used + k) for k in range(1, size + 1)]
        used += size
        for x in new:
            count[x] = 1
        count[host] += 1
        blocks.append([host] + new)
    labels = [str(i) for i in range(1, used + 1)]
    edges = [e for B in blocks for e in clique_cover(rng, B)]
    return new_clutter(labels, edges, minimize=True), blocks


def complete_clutter(labels) -> Clutter:
    return new_clutter(labels, [labels] if len(labels) > 1 else [])
