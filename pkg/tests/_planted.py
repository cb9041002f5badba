"""Random graphs with a planted (ell, d)-partition."""

from __future__ import annotations

import random

from bellgraph.graph import Graph
from bellgraph.sparsify import DENSE, SPARSE


def _bounded_pairs(pairs, d: int, rng: random.Random):
    """Random subset of ``pairs`` in which every vertex is used at most ``d`` times."""
    load: dict[int, int] = {}
    chosen = []
    pairs = list(pairs)
    rng.shuffle(pairs)
    for u, v in pairs:
        if load.get(u, 0) < d and load.get(v, 0) < d and rng.random() < 0.7:
            chosen.append((u, v))
            load[u] = load.get(u, 0) + 1
            load[v] = load.get(v, 0) + 1
    return chosen


def planted(sizes, kinds, d: int, rng: random.Random, shuffle: bool = True):
    """A graph with bags of the given sizes whose pair (i, j) is d-sparse or d-dense per ``kinds``.

    Returns ``(graph, bags)``; with ``shuffle`` the bag vertices are scattered.
    """
    n = sum(sizes)
    labels = list(range(n))
    if shuffle:
        rng.shuffle(labels)
    bags, start = [], 0
    for s in sizes:
        bags.append(sorted(labels[start:start + s]))
        start += s
    edges = set()
    for i, a in enumerate(bags):
        for j in range(i, len(bags)):
            b = bags[j]
            if i == j:
                pairs = [(u, v) for x, u in enumerate(a) for v in a[x + 1:]]
            else:
                pairs = [(u, v) for u in a for v in b]
            exceptions = set(_bounded_pairs(pairs, d, rng))
            if kinds[i][j] == SPARSE:
                edges |= exceptions
            else:
                edges |= {p for p in pairs if p not in exceptions}
    return Graph.from_edges(n, [(min(u, v), max(u, v)) for u, v in edges]), bags


def random_kinds(r: int, rng: random.Random, distinct_profiles: bool = False):
    while True:
        kinds = [[None] * r for _ in range(r)]
        for i in range(r):
            for j in range(i, r):
                kinds[i][j] = kinds[j][i] = rng.choice((SPARSE, DENSE))
        if not distinct_profiles or len({tuple(row) for row in kinds}) == r:
            return kinds
