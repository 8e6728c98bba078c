"""Seeded random clutters."""

from __future__ import annotations

import random

from .clutter import Clutter, new_clutter
from .errors import Unattainable

MAX_TRIES_PER_EDGE = 200


def random_clutter(n: int, m: int, max_arity: int, rng: random.Random | int | None = None,
                   min_arity: int = 2) -> Clutter:
    """``m`` random edges on vertices ``1..n`` with sizes in ``[min_arity, max_arity]``.

    A draw that duplicates, contains or is contained in an accepted edge is
    rejected and redrawn; after ``MAX_TRIES_PER_EDGE * m`` rejections the
    request is deemed unattainable.
    """
    if n < 1 or max_arity < min_arity or min_arity < 1:
        raise ValueError("need n >= 1 and 1 <= min_arity <= max_arity")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    labels = [str(i) for i in range(1, n + 1)]
    edges: list[frozenset[str]] = []
    budget = MAX_TRIES_PER_EDGE * max(m, 1)
    while len(edges) < m:
        if budget == 0:
            raise Unattainable(f"could not place {m} edges on {n} vertices with arity <= {max_arity}")
        budget -= 1
        size = min(rng.randint(min_arity, max_arity), n)
        e = frozenset(rng.sample(labels, size))
        if any(e <= f or f <= e for f in edges):
            continue
        edges.append(e)
    return new_clutter(labels, edges)
