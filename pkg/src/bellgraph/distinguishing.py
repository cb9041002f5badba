"""Distinguished sets and the thirteen minimal classes of infinite distinguishing number.

Class numbering follows the standard list: 1 disjoint unions of cliques;
2-5 two-part graphs where each vertex of the second part has at most one
neighbour in the first part (parts independent/clique in the four
combinations); 6-7 two-part graphs whose first part has nested
neighbourhoods in the second; 8-13 complements of 1-6.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .classspec import ClassSpec
from .errors import SizeExceeded
from .graph import Graph, complement, components, mask_of, popcount, vertices_of

MAX_EXHAUSTIVE = 20
CLASS_IDS = tuple(range(1, 14))

# (first part is a clique, second part is a clique) for the two-part classes
_PART_KINDS = {
    2: (False, False),
    3: (False, True),
    4: (True, False),
    5: (True, True),
    6: (False, False),
    7: (False, True),
}


@dataclass(frozen=True)
class DistinguishReport:
    x: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def large_count(self, k: int) -> int:
        """Number of classes with at least ``k`` vertices."""
        return sum(1 for c in self.classes if len(c) >= k)


def distinguished_sets(g: Graph, x: Iterable[int]) -> DistinguishReport:
    """Group the vertices of ``g`` by their neighbourhood inside ``x``.

    ``x`` need not be disjoint from the classes. Classes are listed in order
    of their smallest vertex.
    """
    xs = sorted(set(x))
    for v in xs:
        g.check_vertex(v)
    xm = mask_of(xs)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v] & xm, []).append(v)
    return DistinguishReport(tuple(xs), tuple(tuple(c) for c in groups.values()))


def max_distinguish(g: Graph, k: int) -> tuple[int, tuple[int, ...]]:
    """Maximum over all ``X`` of the number of ``X``-classes of size at least ``k``.

    Returns the count and the first maximising ``X`` in order of size, then
    lexicographic order.
    """
    if g.n > MAX_EXHAUSTIVE:
        raise SizeExceeded(f"max_distinguish is exhaustive and limited to {MAX_EXHAUSTIVE} vertices")
    rows = g.rows
    best, witness = -1, ()
    for size in range(g.n + 1):
        for xs in combinations(range(g.n), size):
            xm = mask_of(xs)
            counts = Counter(r & xm for r in rows)
            value = sum(1 for c in counts.values() if c >= k)
            if value > best:
                best, witness = value, xs
    return best, witness


# ------------------------------------------------------------- class membership

def _is_clique(g: Graph, mask: int) -> bool:
    return all((g.rows[v] | (1 << v)) & mask == mask for v in vertices_of(mask))


def _is_independent(g: Graph, mask: int) -> bool:
    return all(g.rows[v] & mask == 0 for v in vertices_of(mask))


def _homogeneous_sets(g: Graph, clique: bool) -> Iterator[int]:
    """All cliques (or all independent sets) of ``g`` as masks, including the empty set."""
    n = g.n

    def rec(start: int, chosen: int, allowed: int):
        yield chosen
        for v in range(start, n):
            if (allowed >> v) & 1:
                nbr = g.rows[v] if clique else ~g.rows[v] & ~(1 << v)
                yield from rec(v + 1, chosen | (1 << v), allowed & nbr)

    yield from rec(0, 0, g.full_mask)


def _nested(masks: list[int]) -> bool:
    ordered = sorted(masks, key=popcount)
    return all(a & b == a for a, b in zip(ordered, ordered[1:]))


def _two_part_member(g: Graph, j: int) -> bool:
    first_clique, second_clique = _PART_KINDS[j]
    full = g.full_mask
    for v1 in _homogeneous_sets(g, first_clique):
        v2 = full & ~v1
        if second_clique and not _is_clique(g, v2):
            continue
        if not second_clique and not _is_independent(g, v2):
            continue
        if j <= 5:
            if all(popcount(g.rows[v] & v1) <= 1 for v in vertices_of(v2)):
                return True
        elif _nested([g.rows[v] & v2 for v in vertices_of(v1)]):
            return True
    return False


def in_minimal_class(g: Graph, j: int) -> bool:
    """True iff ``g`` belongs to the ``j``-th minimal class (``1 <= j <= 13``).

    Empty parts are allowed in the two-part descriptions.
    """
    if j not in CLASS_IDS:
        raise ValueError(f"class index must be in 1..13, got {j}")
    if g.n > MAX_EXHAUSTIVE:
        raise SizeExceeded(f"in_minimal_class is exhaustive and limited to {MAX_EXHAUSTIVE} vertices")
    if j >= 8:
        return in_minimal_class(complement(g), j - 7)
    if j == 1:
        return all(_is_clique(g, mask_of(c)) for c in components(g))
    return _two_part_member(g, j)


def infinite_distinguishing_witnesses(spec: ClassSpec) -> list[int]:
    """Indices ``j`` whose minimal class lies inside ``Free(spec)``.

    Each class is hereditary, so it lies inside ``Free(spec)`` exactly when
    it contains none of the forbidden graphs. A nonempty answer means the
    distinguishing number of the class is infinite.
    """
    if spec.m > MAX_EXHAUSTIVE:
        raise SizeExceeded(f"forbidden graphs are limited to {MAX_EXHAUSTIVE} vertices")
    return [j for j in CLASS_IDS if not any(in_minimal_class(f, j) for f in spec.forbidden)]

