"""Stars, costars and skewchains; matching/comatching/halfgraph search; bag
refinement to joined/co-joined pairs; and the bound functions that go with them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from . import bounds as B
from .classspec import ClassSpec
from .distinguishing import in_minimal_class
from .errors import BagsTooSmall, NotBipartite, SizeExceeded
from .generation import unlabelled
from .graph import MAX_VERTICES, Graph, first_embedding, mask_of, vertices_of

KINDS = ("star", "costar", "skewchain")
MAX_MCH = 20
MAX_UNIVERSAL_M = 4


@dataclass(frozen=True)
class StructureSpec:
    """``r`` distinguished vertices ``x_i`` and ``r`` bags ``V_i``.

    A star joins ``x_i`` to ``V_i`` only, a costar to every bag but ``V_i``,
    a skewchain to ``V_1 .. V_i``. The flags make ``X`` a clique, every bag a
    clique, and every pair of distinct bags joined.
    """

    r: int
    kind: str
    bag_size: int
    x_clique: bool = False
    bags_clique: bool = False
    bags_joined: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.r < 1 or self.bag_size < 1:
            raise ValueError("r and bag_size must be positive")

    @property
    def order(self) -> int:
        return self.r * (1 + self.bag_size)

    def x_vertex(self, i: int) -> int:
        return i

    def bag(self, i: int) -> list[int]:
        start = self.r + i * self.bag_size
        return list(range(start, start + self.bag_size))

    def x_sees_bag(self, i: int, j: int) -> bool:
        if self.kind == "star":
            return i == j
        if self.kind == "costar":
            return i != j
        return j <= i

    def label(self) -> str:
        flags = [
            "X clique" if self.x_clique else "X independent",
            "bags cliques" if self.bags_clique else "bags independent",
            "bags joined" if self.bags_joined else "bags co-joined",
        ]
        return f"{self.r}-{self.kind} ({', '.join(flags)}; bag size {self.bag_size})"


def build_structure(s: StructureSpec) -> Graph:
    if s.order > MAX_VERTICES:
        raise SizeExceeded(f"structure has {s.order} vertices, more than {MAX_VERTICES}")
    edges = []
    r = s.r
    if s.x_clique:
        edges += [(i, j) for i in range(r) for j in range(i + 1, r)]
    bags = [s.bag(i) for i in range(r)]
    for i in range(r):
        for j in range(r):
            if s.x_sees_bag(i, j):
                edges += [(i, v) for v in bags[j]]
        if s.bags_clique:
            edges += [(u, v) for a, u in enumerate(bags[i]) for v in bags[i][a + 1:]]
        if s.bags_joined:
            for j in range(i + 1, r):
                edges += [(u, v) for u in bags[i] for v in bags[j]]
    return Graph.from_edges(s.order, edges)


def unavoidable_specs(r: int) -> list[StructureSpec]:
    """The 24 uniform structures with ``|X| = r`` bags of size ``r``, in a fixed order."""
    return [
        StructureSpec(r, kind, r, xc, bc, bj)
        for kind, xc, bc, bj in product(KINDS, (False, True), (False, True), (False, True))
    ]


def matching(r: int) -> Graph:
    return build_structure(StructureSpec(r, "star", 1))


def comatching(r: int) -> Graph:
    return build_structure(StructureSpec(r, "costar", 1))


def halfgraph(r: int) -> Graph:
    return build_structure(StructureSpec(r, "skewchain", 1))


# Minimal class each uniform structure is universal for, keyed by
# (kind, X clique, bags cliques, bags joined).
_DESIGNATION = {
    ("star", False, False, False): 2,
    ("star", True, False, False): 4,
    ("star", False, True, True): 3,
    ("star", True, True, True): 5,
    ("costar", False, False, False): 12,
    ("costar", True, False, False): 10,
    ("costar", False, True, True): 11,
    ("costar", True, True, True): 9,
    ("skewchain", False, False, False): 6,
    ("skewchain", True, True, True): 13,
    ("skewchain", False, True, True): 7,
    ("skewchain", True, False, False): 7,
}


def designated_class(s: StructureSpec) -> int:
    """Index of a minimal class whose small graphs all embed in the structure.

    Bags that are cliques but pairwise co-joined contain a disjoint union of
    cliques (class 1); independent but pairwise joined bags contain a
    complete multipartite graph (class 8).
    """
    if s.bags_clique and not s.bags_joined:
        return 1
    if not s.bags_clique and s.bags_joined:
        return 8
    return _DESIGNATION[(s.kind, s.x_clique, s.bags_clique, s.bags_joined)]


# ------------------------------------------------------------------ search

@dataclass(frozen=True)
class MchWitness:
    kind: str  # matching | comatching | halfgraph
    size: int
    embedding: tuple[int, ...]  # images of x_1..x_s, then of the matched vertices


def _check_bipartite(g: Graph, part: int) -> None:
    other = g.full_mask & ~part
    for v in vertices_of(part):
        if g.rows[v] & part:
            raise NotBipartite(f"vertex {v} has a neighbour inside the given part")
    for v in vertices_of(other):
        if g.rows[v] & other:
            raise NotBipartite(f"vertex {v} has a neighbour inside the other part")


def find_mch(g: Graph, part: Sequence[int], p: int, q: int, r: int) -> MchWitness | None:
    """An induced ``p``-matching, ``q``-comatching or ``r``-halfgraph with ``X`` inside ``part``.

    Tried in that order; ``None`` when none exists.
    """
    if g.n > MAX_MCH:
        raise SizeExceeded(f"find_mch is exhaustive and limited to {MAX_MCH} vertices")
    for v in part:
        g.check_vertex(v)
    pm = mask_of(part)
    _check_bipartite(g, pm)
    other = g.full_mask & ~pm
    for kind, size, pattern in (
        ("matching", p, matching),
        ("comatching", q, comatching),
        ("halfgraph", r, halfgraph),
    ):
        if size < 1:
            continue
        pat = pattern(size)
        allowed = [pm] * size + [other] * size
        f = first_embedding(pat, g, allowed)
        if f is not None:
            return MchWitness(kind, size, tuple(f))
    return None


# -------------------------------------------------------------- refinement

def refine_requirements(k: int, t: int) -> list[int]:
    """Bag sizes the refinement needs: the last bag pigeonholes ``t`` vertices out of
    ``2^(2(k-1)t)`` neighbourhood patterns, the others recurse at ``2t``."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    if k == 1:
        return [t]
    return refine_requirements(k - 1, 2 * t) + [(t - 1) * 2 ** (2 * (k - 1) * t) + 1]


def cook_refine(g: Graph, bags: Sequence[Sequence[int]], t: int) -> list[list[int]]:
    """Subsets ``W_i`` of the bags, ``t`` vertices each, pairwise joined or co-joined.

    Inductive procedure: refine the first ``k-1`` bags at ``2t``, keep ``t``
    vertices of the last bag sharing one neighbourhood pattern on them, then
    halve every earlier set by adjacency to those ``t`` vertices. Bags longer
    than the procedure needs are truncated first.
    """
    k = len(bags)
    if k == 0:
        return []
    seen = 0
    for b in bags:
        for v in b:
            g.check_vertex(v)
        m = mask_of(b)
        if m & seen:
            raise ValueError("bags must be disjoint")
        seen |= m
    need = refine_requirements(k, t)
    trimmed = [list(b)[:n] for b, n in zip(bags, need)]
    return _refine(g, trimmed, t)


def _refine(g: Graph, bags: list[list[int]], t: int) -> list[list[int]]:
    k = len(bags)
    if k == 1:
        if len(bags[0]) < t:
            raise BagsTooSmall(f"bag has {len(bags[0])} vertices, {t} needed")
        return [bags[0][:t]]
    first = _refine(g, bags[:-1], 2 * t)
    union = mask_of(v for w in first for v in w)
    groups: dict[int, list[int]] = {}
    for v in bags[-1]:
        groups.setdefault(g.rows[v] & union, []).append(v)
    pattern, last = max(groups.items(), key=lambda kv: len(kv[1]), default=(0, []))
    if len(last) < t:
        raise BagsTooSmall(
            f"last bag has no {t} vertices sharing a neighbourhood pattern "
            f"({len(bags[-1])} vertices, {len(groups)} patterns)"
        )
    out = []
    for w in first:
        joined = [v for v in w if (pattern >> v) & 1]
        apart = [v for v in w if not (pattern >> v) & 1]
        out.append((joined if len(joined) >= len(apart) else apart)[:t])
    out.append(last[:t])
    return out


def joined_or_cojoined(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    edges = {g.adjacent(u, v) for u in a for v in b}
    return len(edges) <= 1


# ----------------------------------------------------------------- bounds

def _f_fits(p: int, q: int, r: int) -> bool:
    # f(p,q,r) <= r^(2^(p+q)), so this many bits always suffice
    return p + q < 64 and 2 ** (p + q) * math.log2(r) < B.EXACT_BITS


@lru_cache(maxsize=None)
def _f_exact(p: int, q: int, r: int) -> int:
    if p == 1 or q == 1 or r == 1:
        return 1
    if p == 2 or q == 2:
        return r
    if r == 2:
        return 2
    return 2 * (r - 1) * (r - 2) * _f_exact(p - 1, q, r) * _f_exact(p, q - 1, r) + 1


def bound_f(p: B.Bound, q: B.Bound, r: B.Bound) -> B.Bound:
    """The matching/comatching/halfgraph threshold ``f(p, q, r)``.

    Exact through the recurrence when the result is small enough; otherwise
    the symbolic upper bound ``r^(2^(p+q))``.
    """
    if all(isinstance(x, int) for x in (p, q, r)):
        if min(p, q, r) < 1:
            raise ValueError("f is defined for p, q, r >= 1")
        if min(p, q, r) <= 2 or _f_fits(p, q, r):
            return _f_exact(p, q, r)
    return B.power(r, B.power(2, B.add(p, q)))


def bound_n(k: B.Bound, t: B.Bound, form: str = "recursion") -> B.Bound:
    """The bag size ``n_k(t)`` for refining ``k`` bags to ``t`` vertices.

    ``recursion`` (default) is the closed form of ``n_1(t) = t``,
    ``n_{k+1}(t) = max(t*2^(2kt), n_k(2t))``, namely ``2^(k-2) * t * 2^(2^(k-1) t)``
    for ``k >= 2``. ``loose`` is the weaker bound ``t*2^(4t)`` for
    ``k = 2`` and ``2^(k-2) * t * 2^(2^k t)`` for ``k >= 3``.
    """
    if isinstance(k, int) and k == 1:
        return t
    if form == "recursion":
        return B.mul(B.power(2, B.add(k, -2)), t, B.power(2, B.mul(B.power(2, B.add(k, -1)), t)))
    if form == "loose":
        if isinstance(k, int) and k == 2:
            return B.mul(t, B.power(2, B.mul(4, t)))
        return B.mul(B.power(2, B.add(k, -2)), t, B.power(2, B.mul(B.power(2, k), t)))
    raise ValueError(f"unknown form {form!r}")


def bound_n_recursive(k: int, t: int) -> int:
    """``n_k(t)`` straight from the recursion (small arguments only)."""
    if k == 1:
        return t
    return max(t * 2 ** (2 * (k - 1) * t), bound_n_recursive(k - 1, 2 * t))


# Exact values where known: R(1)=1, R(2)=2, R(3)=6, R(4)=18; four-colour R_4(1)=1, R_4(2)=2.
_RAMSEY = {1: 1, 2: 2, 3: 6, 4: 18}
_RAMSEY4 = {1: 1, 2: 2}


@dataclass(frozen=True)
class BoundsForM:
    m: int
    form: str
    R: B.Bound
    M: B.Bound
    ell: B.Bound
    k: B.Bound
    p: B.Bound

    def items(self):
        return [("R", self.R), ("M", self.M), ("ell", self.ell), ("k", self.k), ("p", self.p)]

    @property
    def all_exact(self) -> bool:
        return all(B.is_exact(v) for _, v in self.items())


def bounds_for_m(m: int, form: str = "display") -> BoundsForM:
    """Bounds for classes whose largest forbidden graph has ``m`` vertices.

    ``display`` uses the naive Ramsey bounds ``R = 2^(2m)``, ``M = 2^(16m)``
    and the closed upper bounds ``ell <= 2^(16m * 4^(2^(16m)))``,
    ``k <= 2^(M-2) * R * 2^(2^M * R)``. ``compositional`` evaluates
    ``ell = f(M, M, M)`` and ``k = n_M(R)`` with exact Ramsey numbers where
    known (``M`` otherwise ``4^(4(2m-1))``). Both take ``p = ell^m + 1``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if form == "display":
        R = B.power(2, 2 * m)
        M = B.power(2, 16 * m)
        ell = B.power(2, B.mul(16 * m, B.power(4, B.power(2, 16 * m))))
        k = B.mul(B.power(2, B.add(M, -2)), R, B.power(2, B.mul(B.power(2, M), R)))
    elif form == "compositional":
        R = _RAMSEY.get(m, B.power(2, 2 * m))
        M = _RAMSEY4.get(2 * m - 1, B.power(4, 4 * (2 * m - 1)))
        ell = bound_f(M, M, M)
        k = bound_n(M, R)
    else:
        raise ValueError(f"unknown form {form!r}")
    p = B.add(B.power(ell, m), 1)
    return BoundsForM(m, form, R, M, ell, k, p)


# ------------------------------------------------------------ universality

def check_universal(u: Graph, j: int, m: int) -> bool:
    """True iff every ``m``-vertex graph of the ``j``-th minimal class embeds in ``u``."""
    if m > MAX_UNIVERSAL_M:
        raise SizeExceeded(f"check_universal enumerates graphs on at most {MAX_UNIVERSAL_M} vertices")
    for g in unlabelled(ClassSpec.unconstrained(), m):
        if in_minimal_class(g, j) and first_embedding(g, u) is None:
            return False
    return True
