"""Periodic words, the graph classes ``P(w, H)`` they define, and their antichains.

Positions are 1-based. Two positions ``i < j`` are adjacent in the graph
built from ``w`` and a looped letter graph ``H`` iff either they are
consecutive and ``w_i w_j`` is a non-edge of ``H``, or they are further
apart and ``w_i w_j`` is an edge of ``H``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Callable, Sequence

from . import kernels
from .classspec import ClassSpec
from .errors import (
    FactorMismatch,
    FormatError,
    NonIncreasingIndices,
    OracleInconsistency,
    PreconditionViolated,
    SearchCapExceeded,
    SizeExceeded,
)
from .graph import MAX_VERTICES, Graph, LoopedGraph, contains

MAX_MEMBER_ORDER = 12
LETTERS = string.ascii_lowercase


@dataclass(frozen=True)
class PeriodicWord:
    """The infinite word ``base base base ...`` over letters ``0..alphabet-1``."""

    base: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        if not self.base:
            raise ValueError("the base of a periodic word must be nonempty")
        if any(a < 0 for a in self.base):
            raise ValueError("letters are non-negative integers")

    @classmethod
    def parse(cls, literal: str) -> "PeriodicWord":
        """Parse ``(abc)``; letter ``a`` is letter 0, ``b`` is 1 and so on."""
        text = literal.strip()
        if len(text) < 3 or text[0] != "(" or text[-1] != ")":
            raise FormatError(f"word literal must look like '(abc)', got {literal!r}")
        body = text[1:-1]
        if any(ch not in LETTERS for ch in body):
            raise FormatError(f"word letters must be lower-case ASCII, got {body!r}")
        return cls(tuple(LETTERS.index(ch) for ch in body))

    @property
    def period(self) -> int:
        return len(self.base)

    @property
    def letters_used(self) -> int:
        return max(self.base) + 1

    def letter(self, i: int) -> int:
        if i < 1:
            raise IndexError("positions are 1-based")
        return self.base[(i - 1) % len(self.base)]

    def factor(self, start: int, length: int) -> tuple[int, ...]:
        """The ``length`` letters starting at position ``start``."""
        return tuple(self.letter(start + i) for i in range(length))

    def recurrences(self, length: int, limit: int) -> list[int]:
        """Every ``l <= limit`` with ``w_{l+1} .. w_{l+length}`` equal to the prefix of that length."""
        prefix = self.factor(1, length)
        return [l for l in range(1, limit + 1) if self.factor(l + 1, length) == prefix]

    def __str__(self):
        return "(" + "".join(LETTERS[a] for a in self.base) + ")"


@dataclass(frozen=True)
class PwhClass:
    w: PeriodicWord
    h: LoopedGraph

    def __post_init__(self):
        if self.w.letters_used > self.h.n:
            raise ValueError(f"word uses {self.w.letters_used} letters but H has {self.h.n} vertices")

    def letter_adjacent(self, a: int, b: int) -> bool:
        return self.h.adjacent(a, b)

    def __str__(self):
        return f"{self.w} over H={self.h.edges()}"


def linear_forests() -> PwhClass:
    """``a^inf`` over a single loopless letter: the class of linear forests."""
    return PwhClass(PeriodicWord((0,)), LoopedGraph(1, (0,)))


def pwh_edge(c: PwhClass, i: int, j: int) -> bool:
    a, b = c.w.letter(i), c.w.letter(j)
    return (abs(i - j) == 1) != c.h.adjacent(a, b)


def build_pwh_graph(c: PwhClass, indices: Sequence[int]) -> Graph:
    """Graph on the given positions (vertex ``r`` is ``indices[r]``)."""
    idx = list(indices)
    if any(i < 1 for i in idx):
        raise NonIncreasingIndices("positions are positive integers")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise NonIncreasingIndices(f"positions must be strictly increasing: {idx}")
    if len(idx) > MAX_VERTICES:
        raise SizeExceeded(f"at most {MAX_VERTICES} positions")
    return Graph.from_edges(
        len(idx),
        [(r, s) for r in range(len(idx)) for s in range(r + 1, len(idx)) if pwh_edge(c, idx[r], idx[s])],
    )


def prefix_graph(c: PwhClass, length: int) -> Graph:
    return build_pwh_graph(c, range(1, length + 1))


def _member_positions(g: Graph, c: PwhClass) -> bool:
    hadj = [c.h.rows[a] for a in range(c.h.n)]
    return kernels.pwh_search(list(g.rows), list(c.w.base), hadj)


def _member_prefix(g: Graph, c: PwhClass, factor: int) -> bool:
    length = factor * max(g.n, 1) * c.w.period
    if length > MAX_VERTICES:
        raise SizeExceeded(
            f"prefix of length {length} exceeds {MAX_VERTICES}; use the position search instead"
        )
    return contains(prefix_graph(c, length), g)


def pwh_member(g: Graph, c: PwhClass, method: str = "positions") -> bool:
    """True iff ``g`` is an induced subgraph of some graph built from ``c``.

    ``positions`` searches increasing position sequences directly. Any
    ``k``-vertex member fits in the first ``k*(period+1) - 1`` positions, so
    this equals embedding into the prefix graph of length ``2*k*period``,
    which ``prefix`` does literally and ``doubled`` does at twice the length.
    """
    if g.n > MAX_MEMBER_ORDER:
        raise SizeExceeded(f"pwh_member is limited to graphs on {MAX_MEMBER_ORDER} vertices")
    if method == "positions":
        return _member_positions(g, c)
    if method == "prefix":
        return _member_prefix(g, c, 2)
    if method == "doubled":
        return _member_prefix(g, c, 4)
    raise ValueError(f"unknown method {method!r}")


def pwh_subclass_of(spec: ClassSpec, c: PwhClass) -> bool:
    """True iff every graph of ``P(w, H)`` avoids all forbidden graphs of ``spec``."""
    if spec.m > MAX_MEMBER_ORDER:
        raise SizeExceeded(f"forbidden graphs are limited to {MAX_MEMBER_ORDER} vertices")
    return not any(_member_positions(f, c) for f in spec.forbidden)


def antichain_seed(c: PwhClass, a_len: int, second_occurrence: int) -> Graph:
    """Prefix graph on positions ``1..l`` with the adjacency of ``1`` and ``l`` flipped.

    ``l = second_occurrence``; the first ``a_len`` letters must reappear
    starting at position ``l + 1``.
    """
    ell = second_occurrence
    if a_len < 1:
        raise PreconditionViolated("a_len must be positive")
    if ell < 3:
        raise PreconditionViolated("the seed needs at least 3 positions")
    if c.w.factor(ell + 1, a_len) != c.w.factor(1, a_len):
        raise FactorMismatch(
            f"the prefix of length {a_len} does not recur at position {ell + 1} of {c.w}"
        )
    base = prefix_graph(c, ell)
    rows = list(base.rows)
    flip = 1 << (ell - 1)
    rows[0] ^= flip
    rows[ell - 1] ^= 1
    return Graph(ell, tuple(rows))


def shrink_to_minimal_forbidden(g: Graph, member: Callable[[Graph], bool]) -> Graph:
    """Greedily delete vertices while the graph stays outside the class.

    The result is outside the class but every single-vertex deletion of it
    is inside.
    """
    if member(g):
        raise OracleInconsistency("the starting graph is a member of the class")
    current = g
    v = 0
    while v < current.n:
        smaller = current.delete(v)
        if not member(smaller):
            current = smaller
            v = 0
        else:
            v += 1
    return current


def antichain_family(c: PwhClass, count: int, scan: int | None = None) -> list[Graph]:
    """``count`` minimal forbidden graphs of ``P(w, H)`` with strictly increasing orders.

    Each round seeds with a prefix length one more than the previous output's
    order, flips the first and last positions of a recurrence and shrinks the
    seed to a minimal non-member. Seeds that are members, or that shrink to a
    graph no larger than the previous output, are skipped.
    """
    if count < 0:
        raise ValueError("count must be non-negative")

    def member(x: Graph) -> bool:
        if x.n > MAX_MEMBER_ORDER:
            raise SearchCapExceeded(
                f"candidate on {x.n} vertices exceeds the membership limit of {MAX_MEMBER_ORDER}"
            )
        return _member_positions(x, c)

    out: list[Graph] = []
    k = max(3, 2 * c.w.period + 1)
    for _ in range(count):
        limit = scan if scan is not None else k + 4 * c.w.period * k
        found = None
        for ell in c.w.recurrences(k, limit):
            if ell <= k:
                continue
            if ell > MAX_MEMBER_ORDER:
                break
            seed = antichain_seed(c, k, ell)
            if member(seed):
                continue
            minimal = shrink_to_minimal_forbidden(seed, member)
            if out and minimal.n <= out[-1].n:
                continue
            found = minimal
            break
        if found is None:
            raise SearchCapExceeded(
                f"no usable seed with prefix length {k} within the first {limit} positions"
                f" and the membership limit of {MAX_MEMBER_ORDER} vertices"
            )
        out.append(found)
        k = found.n + 1
    return out
