"""Time the compiled and pure-Python kernels on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each workload is run through every importable backend; results are checked
for agreement before timings are reported.
"""

from __future__ import annotations

import argparse
import random
import timeit

from bellgraph import kernels
from bellgraph.graph import Graph, _allowed_masks, _twin_lower, cycle_graph, refine_colours
from bellgraph.words import PeriodicWord, PwhClass, linear_forests
from bellgraph.graph import LoopedGraph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def workloads(rng: random.Random):
    host = random_graph(40, 0.5, rng)
    pattern = random_graph(6, 0.5, rng)
    allowed = _allowed_masks(pattern, host)
    yield (
        "embeddings: all 6-vertex copies in G(40, 1/2)",
        lambda k: k.search_embeddings(list(pattern.rows), list(host.rows), host.n, allowed,
                                      list(range(pattern.n)), 0),
    )

    c5 = cycle_graph(5)
    dense = random_graph(30, 0.5, rng)
    c5_allowed = _allowed_masks(c5, dense)
    yield (
        "embeddings: count induced C5 copies in G(30, 1/2)",
        lambda k: k.search_embeddings(list(c5.rows), list(dense.rows), dense.n, c5_allowed,
                                      list(range(5)), 0, True),
    )

    graphs = [random_graph(10, 0.5, rng) for _ in range(30)]
    regular = [cycle_graph(10), Graph.from_edges(10, [(i, (i + 3) % 10) for i in range(10)])]
    inputs = [(list(g.rows), refine_colours(g), _twin_lower(g)) for g in graphs + regular]
    yield (
        "canonical order: 30 random + 2 regular 10-vertex graphs",
        lambda k: [k.canonical_order(*x) for x in inputs],
    )

    forests = linear_forests()
    word2 = PwhClass(PeriodicWord.parse("(aab)"), LoopedGraph.from_edges(2, [(0, 0), (0, 1)]))
    pats = [random_graph(8, 0.3, rng) for _ in range(40)]
    yield (
        "pwh position search: 40 random 8-vertex graphs, two classes",
        lambda k: [k.pwh_search(list(g.rows), list(c.w.base), list(c.h.rows))
                   for g in pats for c in (forests, word2)],
    )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    backends = kernels.backends()
    names = [b.BACKEND for b in backends]
    print(f"backends: {', '.join(names)}")
    for label, run in workloads(random.Random(args.seed)):
        outputs = [run(b) for b in backends]
        if any(o != outputs[0] for o in outputs[1:]):
            raise SystemExit(f"backends disagree on: {label}")
        best = [min(timeit.repeat(lambda b=b: run(b), number=1, repeat=args.repeat)) for b in backends]
        cells = "  ".join(f"{n}={t * 1e3:9.2f} ms" for n, t in zip(names, best))
        ratio = f"  speedup x{best[-1] / best[0]:.1f}" if len(best) > 1 else ""
        print(f"{label}\n    {cells}{ratio}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
