"""Slow, obviously-correct reference implementations used to check the library."""

from __future__ import annotations

from itertools import combinations, permutations

from bellgraph.graph import Graph


def adj(g, u, v) -> bool:
    return bool((g.rows[u] >> v) & 1)


def brute_is_embedding(p: Graph, h: Graph, f) -> bool:
    if len(set(f)) != len(f):
        return False
    return all(adj(p, a, b) == adj(h, f[a], f[b]) for a, b in combinations(range(p.n), 2))


def brute_embeddings(p: Graph, h: Graph) -> list[tuple[int, ...]]:
    """Every induced embedding, by trying all injections (sorted lexicographically)."""
    return sorted(f for f in permutations(range(h.n), p.n) if brute_is_embedding(p, h, f))


def brute_contains(h: Graph, p: Graph) -> bool:
    return any(brute_is_embedding(p, h, f) for f in permutations(range(h.n), p.n))


def encode(g: Graph, perm) -> tuple:
    # perm[i] = old vertex placed at new position i
    return tuple(adj(g, perm[i], perm[j]) for i, j in combinations(range(g.n), 2))


def brute_canonical(g: Graph) -> tuple:
    return min(encode(g, p) for p in permutations(range(g.n)))


def brute_automorphisms(g: Graph) -> int:
    return sum(1 for p in permutations(range(g.n)) if brute_is_embedding(g, g, p))


def set_partitions(items: list):
    """Every partition of ``items`` into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pr for b, pr in enumerate(pairs) if (bits >> b) & 1])


def brute_speed(forbidden: list[Graph], n: int) -> int:
    return sum(
        1 for g in all_labelled_graphs(n)
        if not any(f.n <= g.n and brute_contains(g, f) for f in forbidden)
    )


def _clique(g, vs) -> bool:
    return all(adj(g, a, b) for a, b in combinations(vs, 2))


def _independent(g, vs) -> bool:
    return not any(adj(g, a, b) for a, b in combinations(vs, 2))


def brute_minimal_class(g: Graph, j: int) -> bool:
    """Membership in the thirteen minimal classes straight from their descriptions,
    over every ordered bipartition (empty parts allowed)."""
    if j >= 8:
        comp = Graph.from_edges(g.n, [(a, b) for a, b in combinations(range(g.n), 2) if not adj(g, a, b)])
        return brute_minimal_class(comp, j - 7)
    if j == 1:
        # P3-free: no induced path on three vertices
        return not any(
            adj(g, a, b) and adj(g, b, c) and not adj(g, a, c)
            for a, b, c in permutations(range(g.n), 3)
        )
    kinds = {2: (0, 0), 3: (0, 1), 4: (1, 0), 5: (1, 1), 6: (0, 0), 7: (0, 1)}
    c1, c2 = kinds[j]
    for bits in range(1 << g.n):
        v1 = [v for v in range(g.n) if (bits >> v) & 1]
        v2 = [v for v in range(g.n) if not (bits >> v) & 1]
        if not (_clique(g, v1) if c1 else _independent(g, v1)):
            continue
        if not (_clique(g, v2) if c2 else _independent(g, v2)):
            continue
        if j <= 5:
            if all(sum(adj(g, v, u) for u in v1) <= 1 for v in v2):
                return True
        else:
            nbhds = [frozenset(u for u in v2 if adj(g, v, u)) for v in v1]
            if all(a <= b or b <= a for a, b in combinations(nbhds, 2)):
                return True
    return False


def brute_pwh_forms(edge, length: int, k: int) -> set:
    """Canonical encodings of every ``k``-vertex graph on positions ``1..length``."""
    out = set()
    for idx in combinations(range(1, length + 1), k):
        g = Graph.from_edges(k, [(a, b) for a, b in combinations(range(k), 2) if edge(idx[a], idx[b])])
        out.add(brute_canonical(g))
    return out


def brute_max_distinguish(g: Graph, k: int) -> int:
    best = 0
    for size in range(g.n + 1):
        for xs in combinations(range(g.n), size):
            groups = {}
            for v in range(g.n):
                groups.setdefault(frozenset(u for u in xs if adj(g, v, u)), []).append(v)
            best = max(best, sum(1 for c in groups.values() if len(c) >= k))
    return best
