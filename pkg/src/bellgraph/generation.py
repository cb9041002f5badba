"""Isomorph-free generation of the graphs of a hereditary class, and labelled counts."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .classspec import ClassSpec
from .errors import SizeExceeded
from .graph import MAX_CANONICAL, Graph, automorphism_count, canonical_form, canonical_graph


@lru_cache(maxsize=32)
def _levels(spec: ClassSpec, n: int) -> tuple[tuple[Graph, ...], ...]:
    if n == 0:
        return ((Graph(0, ()),),)
    below = _levels(spec, n - 1)
    seen: dict[bytes, Graph] = {}
    new = n - 1
    for g in below[-1]:
        for nb in range(1 << new):
            rows = [r | (((nb >> v) & 1) << new) for v, r in enumerate(g.rows)]
            rows.append(nb)
            h = Graph(n, tuple(rows))
            key = canonical_form(h)
            if key in seen:
                continue
            seen[key] = canonical_graph(h) if spec.admits(h) else None
    level = tuple(sorted((g for g in seen.values() if g is not None), key=canonical_form))
    return below + (level,)


def unlabelled(spec: ClassSpec, n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism type of ``n``-vertex graphs in the class."""
    if n > MAX_CANONICAL:
        raise SizeExceeded(f"generation is limited to {MAX_CANONICAL} vertices")
    return _levels(spec, n)[n]


def labelled_count(spec: ClassSpec, n: int) -> int:
    """Number of graphs of the class on the labelled vertex set ``{1..n}``."""
    return sum(factorial(n) // automorphism_count(g) for g in unlabelled(spec, n))
