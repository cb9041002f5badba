"""Truncations of the universal graphs ``H(M, F)`` and k-uniformity testing.

``H(M, F)`` has ``k`` bags, each an ordered copy of the naturals. Bag ``i``
is a clique iff ``M`` has a loop at ``i``. Bags ``i != j`` are matched
(``l``-th vertex to ``l``-th vertex), co-matched, co-joined or joined
according to whether ``ij`` is an edge of ``F`` and of ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import bounds as B
from .errors import SizeExceeded
from .graph import MAX_VERTICES, Graph, LoopedGraph, first_embedding

MAX_K = 3
MAX_ORDER = 10


@dataclass(frozen=True)
class KUniformTemplate:
    k: int
    m_graph: LoopedGraph
    f_graph: Graph
    n: int

    def __post_init__(self):
        if self.m_graph.n != self.k or self.f_graph.n != self.k:
            raise ValueError("M and F must both have k vertices")
        if self.n < 0:
            raise ValueError("truncation size must be non-negative")

    def vertex(self, bag: int, index: int) -> int:
        return bag * self.n + index

    def locate(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)

    def to_text(self) -> str:
        m_edges = ", ".join(f"{u + 1}{v + 1}" for u, v in self.m_graph.edges())
        f_edges = ", ".join(f"{u + 1}{v + 1}" for u, v in self.f_graph.edges())
        return f"k={self.k}; M: {m_edges}; F: {f_edges}; n={self.n}"


def build_universal(t: KUniformTemplate) -> Graph:
    if t.k * t.n > MAX_VERTICES:
        raise SizeExceeded(f"{t.k} bags of {t.n} exceed {MAX_VERTICES} vertices")
    edges = []
    for i in range(t.k):
        if t.m_graph.has_loop(i):
            edges += [(t.vertex(i, a), t.vertex(i, b)) for a, b in combinations(range(t.n), 2)]
        for j in range(i + 1, t.k):
            in_f, in_m = t.f_graph.adjacent(i, j), t.m_graph.adjacent(i, j)
            for a in range(t.n):
                for b in range(t.n):
                    same = a == b
                    if in_f:
                        linked = same != in_m
                    else:
                        linked = in_m
                    if linked:
                        edges.append((t.vertex(i, a), t.vertex(j, b)))
    return Graph.from_edges(t.k * t.n, edges)


def templates(k: int, n: int):
    """Every template on ``k`` bags, ordered by F edges, then M edges, then loops."""
    pairs = list(combinations(range(k), 2))
    for f_bits in range(1 << len(pairs)):
        f = Graph.from_edges(k, [pr for b, pr in enumerate(pairs) if (f_bits >> b) & 1])
        for m_bits in range(1 << len(pairs)):
            m_edges = [pr for b, pr in enumerate(pairs) if (m_bits >> b) & 1]
            for loops in range(1 << k):
                loop_edges = [(i, i) for i in range(k) if (loops >> i) & 1]
                yield KUniformTemplate(k, LoopedGraph.from_edges(k, m_edges + loop_edges), f, n)


def is_k_uniform(g: Graph, k: int):
    """A ``(template, embedding)`` witnessing ``g`` inside ``H(M, F)`` with ``k`` bags, or ``None``.

    Truncating every bag to ``g.n`` vertices loses nothing: an embedding uses
    at most ``g.n`` indices, which can be compressed order-preservingly.
    """
    if g.n > MAX_ORDER:
        raise SizeExceeded(f"is_k_uniform is exhaustive and limited to {MAX_ORDER} vertices")
    if k > MAX_K:
        raise SizeExceeded(f"is_k_uniform searches at most {MAX_K} bags")
    if k < 1:
        return None
    for t in templates(k, max(g.n, 1)):
        f = first_embedding(g, build_universal(t))
        if f is not None:
            return t, f
    return None


def uniform_bounds(c: int, k: int, m: int, ell: int) -> tuple[int, B.Bound]:
    """``(2^c (k+1) - 1, m * ell^m * 2^(C(m,2)+1))``.

    The first is the uniformity after removing at most ``c`` vertices from a
    ``k``-uniform graph; the second bounds ``k`` when every sparsified
    component has at most ``m`` vertices.
    """
    if min(c, k, m, ell) < 0:
        raise ValueError("inputs must be non-negative")
    first = 2**c * (k + 1) - 1
    second = B.mul(m, B.power(ell, m), B.power(2, comb(m, 2) + 1))
    return first, second
