"""Bell numbers, labelled speeds, and the capped above/below-Bell decision.

The decision first looks for a minimal class of infinite distinguishing
number inside ``Free(spec)``. Failing that it scans candidate classes
``P(w, H)`` with at most ``max_letters`` letters and period at most
``max_period``; the first one contained in the class certifies that the
class is above the Bell numbers.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product

from .classspec import ClassSpec
from .distinguishing import infinite_distinguishing_witnesses
from .errors import CapsExceeded, InvalidPartition, SizeExceeded
from .generation import labelled_count
from .graph import Graph, LoopedGraph, contains, path_graph
from .sparsify import make_partition, sparsify
from .words import PeriodicWord, PwhClass, prefix_graph, pwh_subclass_of

MAX_BELL = 30
MAX_SPEED = 8
MAX_DECIDE_M = 10

ABOVE = "above_bell"
BELOW = "below_bell_within_caps"
INFINITE = "infinite_distinguishing"
WQO_BY_STATUS = {ABOVE: "not_wqo", BELOW: "labelled_wqo", INFINITE: "not_applicable"}


@lru_cache(maxsize=None)
def _bell_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _bell_row(n - 1)
    row = [prev[-1]]
    for x in prev:
        row.append(row[-1] + x)
    return tuple(row)


def bell(n: int) -> int:
    """Bell number ``B_n`` via the Bell triangle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_BELL:
        raise SizeExceeded(f"bell is limited to n <= {MAX_BELL}")
    return _bell_row(n)[0]


def speed(spec: ClassSpec, n: int) -> int:
    """Number of graphs of ``Free(spec)`` on the labelled vertex set ``{1..n}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_SPEED:
        raise SizeExceeded(f"speed is limited to n <= {MAX_SPEED}")
    return labelled_count(spec, n)


@dataclass(frozen=True)
class Caps:
    max_letters: int = 2
    max_period: int = 4
    speed_n: int = 6

    def __post_init__(self):
        if not 1 <= self.max_letters <= 3:
            raise CapsExceeded(f"max_letters must be in 1..3, got {self.max_letters}")
        if not 1 <= self.max_period <= 8:
            raise CapsExceeded(f"max_period must be in 1..8, got {self.max_period}")
        if not 0 <= self.speed_n <= MAX_SPEED:
            raise CapsExceeded(f"speed_n must be in 0..{MAX_SPEED}, got {self.speed_n}")

    def to_dict(self) -> dict:
        return {"max_letters": self.max_letters, "max_period": self.max_period, "speed_n": self.speed_n}


@dataclass
class Verdict:
    status: str
    witnesses: list
    caps: Caps
    wqo: str
    speed_table: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witnesses": self.witnesses,
            "caps": self.caps.to_dict(),
            "wqo": self.wqo,
            "speed_table": [list(row) for row in self.speed_table],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Verdict":
        data = json.loads(text)
        if list(data) != ["status", "witnesses", "caps", "wqo", "speed_table"]:
            raise ValueError(f"unexpected verdict fields {list(data)}")
        return cls(
            data["status"], data["witnesses"], Caps(**data["caps"]), data["wqo"],
            [tuple(r) for r in data["speed_table"]],
        )


# ----------------------------------------------------------- candidates

def _primitive(base: tuple[int, ...]) -> bool:
    p = len(base)
    return not any(p % q == 0 and base == base[:q] * (p // q) for q in range(1, p))


def _h_rows(a: int, bits: int) -> tuple[int, ...]:
    pairs = [(u, v) for u in range(a) for v in range(u, a)]
    rows = [0] * a
    for b, (u, v) in enumerate(pairs):
        if (bits >> b) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return tuple(rows)


def _permute_rows(rows: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(rows)
    for u, r in enumerate(rows):
        for v in range(len(rows)):
            if (r >> v) & 1:
                out[perm[u]] |= 1 << perm[v]
    return tuple(out)


def _base_stabiliser(base: tuple[int, ...]):
    """Letter permutations fixing ``base`` up to rotation, or ``None`` when some
    rotation/relabelling of ``base`` is lexicographically smaller."""
    a = max(base) + 1
    fixing = []
    for perm in permutations(range(a)):
        mapped = tuple(perm[x] for x in base)
        for s in range(len(base)):
            rotated = mapped[s:] + mapped[:s]
            if rotated < base:
                return None
            if rotated == base:
                fixing.append(perm)
    return fixing


def candidates(caps: Caps):
    """Candidate ``(w, H)`` pairs in enumeration order, one per rotation/relabelling class.

    Order: number of letters, then period, then base word, then H encoding.
    Only primitive bases using every letter are kept, each as the least
    word of its class.
    """
    for a in range(1, caps.max_letters + 1):
        pair_count = a * (a + 1) // 2
        for p in range(a, caps.max_period + 1):
            for base in product(range(a), repeat=p):
                if len(set(base)) != a or not _primitive(base):
                    continue
                fixing = _base_stabiliser(base)
                if fixing is None:
                    continue
                seen = set()
                for bits in range(1 << pair_count):
                    rows = _h_rows(a, bits)
                    key = min(_permute_rows(rows, perm) for perm in fixing)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield PwhClass(PeriodicWord(base), LoopedGraph(a, rows))


def prefix_length(c: PwhClass) -> int:
    return min(64, max(12, 6 * c.w.period))


def nondegenerate(c: PwhClass) -> bool:
    """True iff sparsifying a prefix graph along its letter classes leaves the path ``1..N``.

    Each letter's positions form one bag; pairs are labelled with ``d = 2``
    (sparse on ties) and dense pairs complemented.
    """
    n = prefix_length(c)
    g = prefix_graph(c, n)
    bags = {}
    for i in range(1, n + 1):
        bags.setdefault(c.w.letter(i), []).append(i - 1)
    try:
        part = make_partition(g, list(bags.values()), len(bags), 2)
    except InvalidPartition:
        return False
    return sparsify(g, part) == path_graph(n)


def _h_json(h: LoopedGraph) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges()]}


def _candidate_witness(c: PwhClass) -> dict:
    return {
        "word": str(c.w),
        "h": _h_json(c.h),
        "nondegeneracy_filter": "passed",
    }


def _evaluate(spec: ClassSpec, c: PwhClass) -> bool:
    return nondegenerate(c) and pwh_subclass_of(spec, c)


def speed_table(spec: ClassSpec, upto: int) -> list[tuple[int, int, int]]:
    return [(n, speed(spec, n), bell(n)) for n in range(1, upto + 1)]


def decide_bell(spec: ClassSpec, caps: Caps | None = None, threads: int = 1) -> Verdict:
    """Above/below-Bell verdict within the search caps, with the wqo consequence attached.

    ``threads`` evaluates candidates concurrently (0 = one per CPU); the
    reported witness is always the least candidate in enumeration order.
    """
    caps = caps or Caps()
    if spec.m > MAX_DECIDE_M:
        raise SizeExceeded(f"forbidden graphs are limited to {MAX_DECIDE_M} vertices")
    table = speed_table(spec, caps.speed_n)
    xs = infinite_distinguishing_witnesses(spec)
    if xs:
        return Verdict(INFINITE, [{"class": j} for j in xs], caps, WQO_BY_STATUS[INFINITE], table)
    found = _first_contained(spec, caps, threads)
    if found is not None:
        return Verdict(ABOVE, [_candidate_witness(found)], caps, WQO_BY_STATUS[ABOVE], table)
    return Verdict(BELOW, [], caps, WQO_BY_STATUS[BELOW], table)


def _first_contained(spec: ClassSpec, caps: Caps, threads: int) -> PwhClass | None:
    if threads == 1:
        for c in candidates(caps):
            if _evaluate(spec, c):
                return c
        return None
    workers = threads if threads > 0 else (os.cpu_count() or 1)
    cands = list(candidates(caps))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(lambda c: _evaluate(spec, c), cands)
        for c, ok in zip(cands, results):
            if ok:
                return c
    return None


def wqo_verdict(spec: ClassSpec, caps: Caps | None = None, threads: int = 1) -> Verdict:
    """Same verdict as :func:`decide_bell`; ``wqo`` reads ``not_wqo`` above Bell,
    ``labelled_wqo`` below, ``not_applicable`` for infinite distinguishing number."""
    return decide_bell(spec, caps, threads)


def verify_antichain(gs: list[Graph]) -> bool:
    """True iff no graph of the list is an induced subgraph of another."""
    for i, a in enumerate(gs):
        for j, b in enumerate(gs):
            if i != j and a.n <= b.n and contains(b, a):
                return False
    return True
