"""Finite graphs on at most 64 vertices stored as adjacency row masks.

Vertices are ``0 .. n-1``. Bit ``v`` of ``rows[u]`` is set iff ``uv`` is an
edge. Instances are immutable; every operation returns a new graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import FormatError, InvalidVertex, SizeExceeded

MAX_VERTICES = 64
MAX_CANONICAL = 10

Embedding = tuple  # host vertex of each pattern vertex, indexed by pattern vertex


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class _Adjacency:
    n: int
    rows: tuple[int, ...]

    loops_allowed = False

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeExceeded(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("one adjacency row per vertex required")
        full = (1 << self.n) - 1
        for u, r in enumerate(self.rows):
            if r & ~full:
                raise InvalidVertex(f"row {u} mentions a vertex outside 0..{self.n - 1}")
            if not self.loops_allowed and (r >> u) & 1:
                raise ValueError(f"self-loop at {u} in a simple graph")
            for v in vertices_of(r):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} not in 0..{self.n - 1}")

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask >> self.n:
            raise InvalidVertex(f"vertex set {vertices_of(mask)} not inside 0..{self.n - 1}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbours(self, v: int) -> int:
        return self.rows[v]

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in vertices_of(self.rows[u]) if u <= v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def induced(self, vertices: Sequence[int]):
        """Induced subgraph on ``vertices``, relabelled ``0..`` in the given order."""
        for v in vertices:
            self.check_vertex(v)
        if len(set(vertices)) != len(vertices):
            raise ValueError("repeated vertex")
        rows = []
        for u in vertices:
            r = self.rows[u]
            rows.append(mask_of(i for i, v in enumerate(vertices) if (r >> v) & 1))
        return type(self)(len(vertices), tuple(rows))

    def delete(self, v: int):
        self.check_vertex(v)
        return self.induced([u for u in range(self.n) if u != v])

    def relabel(self, perm: Sequence[int]):
        """Graph with vertex ``u`` renamed ``perm[u]``."""
        rows = [0] * self.n
        for u in range(self.n):
            rows[perm[u]] = mask_of(perm[v] for v in vertices_of(self.rows[u]))
        return type(self)(self.n, tuple(rows))

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"e {u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


class Graph(_Adjacency):
    """Simple undirected graph."""

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


class LoopedGraph(_Adjacency):
    """Undirected graph in which loops are allowed."""

    loops_allowed = True

    def has_loop(self, v: int) -> bool:
        return bool((self.rows[v] >> v) & 1)

    def __repr__(self):
        return f"LoopedGraph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------- text format

def parse_graph(text: str, looped: bool = False):
    """Parse the ``n <count>`` / ``e <u> <v>`` format."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                u, v = int(parts[1]), int(parts[2])
                if u > v or (u == v and not looped):
                    raise FormatError(f"line {lineno}: edge must satisfy u<v" + ("" if looped else " (loops not allowed)"))
                edges.append((u, v))
            else:
                raise FormatError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise FormatError("missing 'n <count>' line")
    cls = LoopedGraph if looped else Graph
    try:
        return cls.from_edges(n, edges)
    except InvalidVertex as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: _Adjacency) -> str:
    return g.to_text()


def read_graph(path, looped: bool = False):
    with open(path) as fh:
        return parse_graph(fh.read(), looped=looped)


# --------------------------------------------------------------- constructors

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return complete_bipartite(1, leaves)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


# ------------------------------------------------------------------ operations

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def symdiff_size(g: _Adjacency, u: int, v: int) -> int:
    """Size of the symmetric difference of the neighbourhoods of ``u`` and ``v``."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InvalidVertex("symdiff_size needs two distinct vertices")
    return popcount(g.rows[u] ^ g.rows[v])


def _allowed_masks(pattern: Graph, host: Graph) -> list[int]:
    # a host vertex can only host a pattern vertex of no larger degree and co-degree
    hdeg = [host.degree(h) for h in range(host.n)]
    allowed = []
    for u in range(pattern.n):
        d = pattern.degree(u)
        c = pattern.n - 1 - d
        allowed.append(mask_of(h for h in range(host.n) if hdeg[h] >= d and host.n - 1 - hdeg[h] >= c))
    return allowed


def find_embeddings(pattern: Graph, host: Graph, limit: int | None = None) -> list[Embedding]:
    """Induced embeddings of ``pattern`` into ``host`` in lexicographic order.

    Each embedding is a tuple whose ``i``-th entry is the image of pattern
    vertex ``i``. With ``limit=None`` the list is exhaustive.
    """
    if pattern.n > host.n:
        return []
    return kernels.search_embeddings(
        list(pattern.rows), list(host.rows), host.n,
        _allowed_masks(pattern, host), list(range(pattern.n)), limit or 0,
    )


def first_embedding(pattern: Graph, host: Graph, allowed: Sequence[int] | None = None) -> Embedding | None:
    """Some induced embedding, found with smallest-domain-first ordering."""
    if pattern.n > host.n:
        return None
    masks = _allowed_masks(pattern, host)
    if allowed is not None:
        masks = [m & a for m, a in zip(masks, allowed)]
    found = kernels.search_embeddings(list(pattern.rows), list(host.rows), host.n, masks, None, 1)
    return found[0] if found else None


def contains(host: Graph, pattern: Graph) -> bool:
    """True iff ``pattern`` is an induced subgraph of ``host``."""
    return first_embedding(pattern, host) is not None


def is_embedding(pattern: Graph, host: Graph, f: Sequence[int]) -> bool:
    if len(f) != pattern.n or len(set(f)) != len(f):
        return False
    if any(not 0 <= h < host.n for h in f):
        return False
    return all(
        pattern.adjacent(u, v) == host.adjacent(f[u], f[v])
        for u in range(pattern.n) for v in range(u + 1, pattern.n)
    )


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by exhaustive search."""
    if g.n > MAX_CANONICAL:
        raise SizeExceeded(f"automorphism_count is exhaustive and limited to {MAX_CANONICAL} vertices")
    if g.n == 0:
        return 1
    return kernels.search_embeddings(
        list(g.rows), list(g.rows), g.n, _allowed_masks(g, g), None, 0, True
    )


def refine_colours(g: _Adjacency) -> list[int]:
    """Stable colour refinement; colours are isomorphism-invariant integers."""
    colour = [0] * g.n
    classes = 1
    while True:
        sig = [
            (colour[v], tuple(sorted(colour[u] for u in vertices_of(g.rows[v]))))
            for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [ranks[s] for s in sig]
        if len(ranks) == classes:
            return colour
        classes = len(ranks)


def _twin_lower(g: _Adjacency) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for u in range(v):
            strip = ~((1 << u) | (1 << v))
            if g.rows[u] & strip == g.rows[v] & strip:
                m |= 1 << u
        out.append(m)
    return out


def canonical_order(g: Graph) -> list[int]:
    if g.n > MAX_CANONICAL:
        raise SizeExceeded(f"canonical_form is exhaustive and limited to {MAX_CANONICAL} vertices")
    return kernels.canonical_order(list(g.rows), refine_colours(g), _twin_lower(g))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-complete byte string: equal iff the graphs are isomorphic.

    The least adjacency encoding over all vertex orderings that list the
    colour-refinement classes in increasing colour order.
    """
    order = canonical_order(g)
    bits = 0
    for i, v in enumerate(order):
        for u in order[:i]:
            bits = (bits << 1) | int(g.adjacent(v, u))
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + bits.to_bytes(max(1, math.ceil(nbits / 8)), "big")


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    return g.induced(order)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges()) != len(h.edges()):
        return False
    if g.n <= MAX_CANONICAL:
        return canonical_form(g) == canonical_form(h)
    return contains(h, g)


def is_connected(g: _Adjacency) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in vertices_of(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def components(g: _Adjacency) -> list[list[int]]:
    left = g.full_mask
    out = []
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in vertices_of(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        out.append(vertices_of(seen))
        left &= ~seen
    return out
