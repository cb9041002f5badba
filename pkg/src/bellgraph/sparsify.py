"""(ell, d)-partitions, sparsification and the embedding-transfer check.

A partition of the vertex set into at most ``ell`` bags is an
(ell, d)-partition when every pair of bags (a bag paired with itself
included) is d-sparse (every vertex sees at most ``d`` vertices of the other
bag) or d-dense (every vertex misses at most ``d`` of them). Sparsification
complements every dense pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidPartition, PreconditionViolated
from .graph import Graph, is_embedding, mask_of, popcount, vertices_of

SPARSE = "sparse"
DENSE = "dense"
MAX_EXHAUSTIVE = 14


def delta(g: Graph, u: Iterable[int], w: Iterable[int]) -> tuple[int, int]:
    """``(Delta(U, W), co-Delta(U, W))``: largest neighbourhood and non-neighbourhood across."""
    us, ws = list(u), list(w)
    for v in us + ws:
        g.check_vertex(v)
    return _delta_masks(g, mask_of(us), mask_of(ws))


def _delta_masks(g: Graph, um: int, wm: int) -> tuple[int, int]:
    dense = sparse = 0
    for a, b in ((um, wm), (wm, um)):
        for v in vertices_of(a):
            nb = g.rows[v] & b
            sparse = max(sparse, popcount(nb))
            dense = max(dense, popcount(b & ~nb & ~(1 << v)))
    return sparse, dense


def pair_kind(g: Graph, um: int, wm: int, d: int) -> str | None:
    """``sparse`` when both labels apply, ``None`` when neither does."""
    sparse, dense = _delta_masks(g, um, wm)
    if sparse <= d:
        return SPARSE
    if dense <= d:
        return DENSE
    return None


@dataclass(frozen=True)
class LdPartition:
    bags: tuple[tuple[int, ...], ...]
    ell: int
    d: int
    t: int
    kinds: tuple[tuple[str, ...], ...] = field(repr=False)

    def kind(self, i: int, j: int) -> str:
        return self.kinds[i][j]

    @property
    def masks(self) -> list[int]:
        return [mask_of(b) for b in self.bags]

    def bag_of(self) -> dict[int, int]:
        return {v: i for i, bag in enumerate(self.bags) for v in bag}

    @property
    def is_t_strong(self) -> bool:
        return all(len(b) >= self.t for b in self.bags)

    def describe(self) -> str:
        lines = []
        for i, bag in enumerate(self.bags):
            kinds = " ".join(f"kind({i},{j})={self.kinds[i][j]}" for j in range(len(self.bags)))
            lines.append(f"bag {i}: {' '.join(map(str, bag))} ; {kinds}")
        return "\n".join(lines)


def make_partition(g: Graph, bags: Sequence[Iterable[int]], ell: int, d: int, t: int = 1) -> LdPartition:
    """Validate ``bags`` as an (ell, d)-partition of ``g`` and label every pair."""
    norm = tuple(tuple(sorted(b)) for b in bags)
    seen = 0
    for b in norm:
        if not b:
            raise InvalidPartition("bags must be nonempty")
        for v in b:
            if not 0 <= v < g.n:
                raise InvalidPartition(f"vertex {v} is not a vertex of the graph")
        m = mask_of(b)
        if m & seen or len(b) != popcount(m):
            raise InvalidPartition("bags overlap")
        seen |= m
    if seen != g.full_mask:
        raise InvalidPartition("bags do not cover the vertex set")
    if len(norm) > ell:
        raise InvalidPartition(f"{len(norm)} bags exceed ell={ell}")
    masks = [mask_of(b) for b in norm]
    kinds = [[None] * len(norm) for _ in norm]
    for i in range(len(norm)):
        for j in range(i, len(norm)):
            k = pair_kind(g, masks[i], masks[j], d)
            if k is None:
                raise InvalidPartition(f"bag pair ({i},{j}) is neither {d}-sparse nor {d}-dense")
            kinds[i][j] = kinds[j][i] = k
    return LdPartition(norm, ell, d, t, tuple(tuple(r) for r in kinds))


def is_valid_partition(g: Graph, p: LdPartition) -> bool:
    try:
        q = make_partition(g, p.bags, p.ell, p.d, p.t)
    except InvalidPartition:
        return False
    return q.kinds == p.kinds


def _set_partitions(n: int, max_blocks: int, min_size: int):
    """Restricted-growth enumeration of partitions of ``0..n-1``."""
    blocks: list[list[int]] = []

    def rec(v: int):
        if v == n:
            if all(len(b) >= min_size for b in blocks):
                yield [tuple(b) for b in blocks]
            return
        remaining = n - v
        short = sum(max(0, min_size - len(b)) for b in blocks)
        if short > remaining:
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1)
            b.pop()
        if len(blocks) < max_blocks:
            blocks.append([v])
            yield from rec(v + 1)
            blocks.pop()

    yield from rec(0)


def find_ld_partition(g: Graph, ell: int, d: int, t: int, mode: str = "exhaustive") -> LdPartition | None:
    """A ``t``-strong (ell, d)-partition of ``g`` or ``None``.

    ``exhaustive`` tries every set partition (complete, small graphs only).
    ``cluster`` groups vertices whose neighbourhoods differ in at most
    ``2*ell*d`` places outside the pair itself (two vertices of one bag always
    do). Groups are unions of bags lying inside one bag of the merged (prime)
    form, so they are validated at ``d`` and, failing that, at ``ell*d``; the
    returned partition records which.
    """
    if mode == "exhaustive":
        if g.n > MAX_EXHAUSTIVE:
            raise PreconditionViolated(f"exhaustive mode is limited to {MAX_EXHAUSTIVE} vertices")
        for bags in _set_partitions(g.n, ell, max(t, 1)):
            try:
                return make_partition(g, bags, ell, d, t)
            except InvalidPartition:
                continue
        return None
    if mode == "cluster":
        if t < 2 * ell * d + 2 * d + 1:
            raise PreconditionViolated(f"cluster mode needs t >= 2*ell*d + 2*d + 1 = {2 * ell * d + 2 * d + 1}")
        return _cluster_partition(g, ell, d, t)
    raise PreconditionViolated(f"unknown mode {mode!r}")


def _cluster_partition(g: Graph, ell: int, d: int, t: int) -> LdPartition | None:
    threshold = 2 * ell * d
    left = g.full_mask
    bags = []
    while left:
        start = (left & -left).bit_length() - 1
        group = 1 << start
        frontier = group
        while frontier:
            nxt = 0
            for u in vertices_of(frontier):
                for v in vertices_of(left & ~group):
                    outside = ~((1 << u) | (1 << v))
                    if popcount((g.rows[u] ^ g.rows[v]) & outside) <= threshold:
                        nxt |= 1 << v
            frontier = nxt & ~group
            group |= nxt
        bags.append(vertices_of(group))
        left &= ~group
    if len(bags) > ell or any(len(b) < t for b in bags):
        return None
    for dd in (d, ell * d):
        try:
            return make_partition(g, bags, ell, dd, t)
        except InvalidPartition:
            continue
    return None


def sparsify(g: Graph, p: LdPartition) -> Graph:
    """Complement every dense pair, including a dense bag paired with itself."""
    if not is_valid_partition(g, p):
        raise InvalidPartition("partition is not a valid (ell, d)-partition of this graph")
    masks = p.masks
    dense_mask = [0] * len(masks)
    for i in range(len(masks)):
        for j in range(len(masks)):
            if p.kinds[i][j] == DENSE:
                dense_mask[i] |= masks[j]
    where = p.bag_of()
    rows = tuple(
        (g.rows[v] ^ dense_mask[where[v]]) & ~(1 << v) for v in range(g.n)
    )
    return Graph(g.n, rows)


def prime_partition(g: Graph, p: LdPartition) -> LdPartition:
    """Merge bags whose dense/sparse profiles against every bag agree.

    The merged partition is an (ell, ell*d)-partition; pair labels carry over
    from the merged bags. A partition that is already prime comes back as is.
    """
    if is_prime(p):
        return p
    if not is_valid_partition(g, p):
        raise PreconditionViolated("partition is not valid for this graph")
    if p.t < 2 * p.d + 1 or not p.is_t_strong:
        raise PreconditionViolated(f"need a t-strong partition with t >= 2d+1 = {2 * p.d + 1}")
    r = len(p.bags)
    groups: dict[tuple, list[int]] = {}
    for i in range(r):
        groups.setdefault(tuple(p.kinds[k][i] for k in range(r)), []).append(i)
    members = list(groups.values())
    bags = tuple(tuple(sorted(v for i in grp for v in p.bags[i])) for grp in members)
    kinds = tuple(
        tuple(p.kinds[a[0]][b[0]] for b in members) for a in members
    )
    return LdPartition(bags, p.ell, p.ell * p.d, p.t, kinds)


def is_prime(p: LdPartition) -> bool:
    r = len(p.bags)
    profiles = {tuple(p.kinds[k][i] for k in range(r)) for i in range(r)}
    return len(profiles) == r


@dataclass
class TransferReport:
    """Outcome of checking one embedding against the three transfer conclusions."""

    ok: bool
    sigma: tuple[int, ...] | None
    bags_map: bool
    density_preserved: bool
    sparsified_embedding: bool
    counterexamples: list[str] = field(default_factory=list)


def verify_embedding_transfer(
    g: Graph, h: Graph, pg: LdPartition, ph: LdPartition, f: Sequence[int]
) -> TransferReport:
    """Check that an embedding ``f`` of ``g`` into ``h`` maps prime bags into prime bags
    by a permutation, preserves pair densities, and embeds the sparsifications.
    """
    for name, graph, part in (("g", g, pg), ("h", h, ph)):
        if not is_valid_partition(graph, part):
            raise PreconditionViolated(f"partition of {name} is not valid")
        need = 5 * 2 ** part.ell * part.d
        if min(len(b) for b in part.bags) < need:
            raise PreconditionViolated(f"partition of {name} is not {need}-strong")
    if not is_embedding(g, h, f):
        raise PreconditionViolated("f is not an induced embedding of g into h")
    qg, qh = prime_partition(g, pg), prime_partition(h, ph)
    if len(qg.bags) != len(qh.bags):
        raise PreconditionViolated(
            f"prime partitions have {len(qg.bags)} and {len(qh.bags)} bags"
        )
    problems: list[str] = []
    where_h = qh.bag_of()
    sigma: list[int] = []
    bags_map = True
    for i, bag in enumerate(qg.bags):
        targets = sorted({where_h[f[v]] for v in bag})
        if len(targets) != 1:
            bags_map = False
            problems.append(f"bag {i} of g meets bags {targets} of h")
            sigma.append(-1)
        else:
            sigma.append(targets[0])
    if bags_map and len(set(sigma)) != len(sigma):
        bags_map = False
        problems.append(f"bag images {sigma} are not a permutation")
    density = bags_map
    if bags_map:
        for i in range(len(qg.bags)):
            for j in range(len(qg.bags)):
                if qg.kinds[i][j] != qh.kinds[sigma[i]][sigma[j]]:
                    density = False
                    problems.append(
                        f"pair ({i},{j}) is {qg.kinds[i][j]} in g but ({sigma[i]},{sigma[j]}) is "
                        f"{qh.kinds[sigma[i]][sigma[j]]} in h"
                    )
    sg, sh = sparsify(g, pg), sparsify(h, ph)
    sparse_ok = True
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if sg.adjacent(u, v) != sh.adjacent(f[u], f[v]):
                sparse_ok = False
                problems.append(f"sparsified adjacency of ({u},{v}) differs from ({f[u]},{f[v]})")
                break
        if not sparse_ok:
            break
    ok = bags_map and density and sparse_ok
    return TransferReport(ok, tuple(sigma) if bags_map else None, bags_map, density, sparse_ok, problems)
