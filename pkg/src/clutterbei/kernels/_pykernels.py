"""Pure-Python bitset kernels.

Vertices are bit positions; ``adj[i]`` is the neighbour mask of vertex ``i``.
Same contract as the compiled ``_ckernels`` module.
"""


def _expand(adj, frontier):
    nb = 0
    while frontier:
        low = frontier & -frontier
        nb |= adj[low.bit_length() - 1]
        frontier ^= low
    return nb


def component_masks(adj, mask):
    """Connected components of the subgraph induced on ``mask``, ordered by lowest vertex."""
    parts = []
    while mask:
        comp = frontier = mask & -mask
        mask ^= frontier
        while frontier:
            frontier = _expand(adj, frontier) & mask
            mask ^= frontier
            comp |= frontier
        parts.append(comp)
    return parts


def count_components(adj, mask):
    count = 0
    while mask:
        frontier = mask & -mask
        mask ^= frontier
        while frontier:
            frontier = _expand(adj, frontier) & mask
            mask ^= frontier
        count += 1
    return count


def component_table(adj, n, threads=1):
    """``table[T]`` = number of components left after deleting the vertex mask ``T``."""
    full = (1 << n) - 1
    return bytearray(count_components(adj, full ^ t) for t in range(1 << n))


def cut_set_masks(adj, n, threads=1):
    """All masks ``T`` with the cut-point property, with their component counts.

    ``T`` qualifies when it is empty or every member raises the component
    count: ``c(T - {i}) < c(T)``. Output is in increasing mask order.
    """
    table = component_table(adj, n)
    out = [(0, table[0])]
    for t in range(1, 1 << n):
        c = table[t]
        rest = t
        while rest:
            low = rest & -rest
            if table[t ^ low] >= c:
                break
            rest ^= low
        else:
            out.append((t, c))
    return out
