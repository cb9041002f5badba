"""Command-line front end.

Exit status: 0 on success, 1 on a domain or file error (message on stderr),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath

from . import bounds as B
from .classspec import parse_graph_blocks, read_class_spec
from .decider import Caps, decide_bell, speed
from .errors import BellGraphError
from .graph import LoopedGraph, read_graph
from .sparsify import find_ld_partition, sparsify
from .unavoidable import bounds_for_m, check_universal
from .words import PeriodicWord, PwhClass, antichain_family, pwh_member
from .decider import verify_antichain


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load_class(args) -> PwhClass:
    w = PeriodicWord.parse(args.word)
    if args.h:
        h = read_graph(args.h, looped=True)
    else:
        h = LoopedGraph(w.letters_used, (0,) * w.letters_used)
    return PwhClass(w, h)


def _bound_json(x: B.Bound) -> dict:
    if B.is_exact(x):
        return {"exact": str(x), "log2": float(B.log2(x)) if x else None}
    level, value = B.magnitude(x)
    return {"expr": B.render(x), "log_level": level, "iterated_log2": mpmath.nstr(value, 12)}


def cmd_decide(args) -> int:
    spec = read_class_spec(args.spec)
    caps = Caps(args.max_letters, args.max_period, args.speed_n)
    verdict = decide_bell(spec, caps, threads=args.threads)
    if args.json:
        print(verdict.to_json())
        return 0
    lines = [f"status: {verdict.status}", f"wqo: {verdict.wqo}"]
    for w in verdict.witnesses:
        if "class" in w:
            lines.append(f"witness: minimal class X_{w['class']}")
        else:
            lines.append(f"witness: w={w['word']} H edges={w['h']['edges']} (non-degeneracy filter {w['nondegeneracy_filter']})")
    lines.append(f"caps: {json.dumps(caps.to_dict())}")
    for n, count, b in verdict.speed_table:
        lines.append(f"n={n} speed={count} bell={b}")
    print("\n".join(lines))
    return 0


def cmd_speed(args) -> int:
    spec = read_class_spec(args.spec)
    value = speed(spec, args.n)
    _emit(args, str(value), {"n": args.n, "speed": value})
    return 0


def cmd_member(args) -> int:
    g = read_graph(args.graph)
    c = _load_class(args)
    ok = pwh_member(g, c, method=args.method)
    _emit(args, "true" if ok else "false", {"member": ok, "word": str(c.w), "method": args.method})
    return 0


def cmd_sparsify(args) -> int:
    g = read_graph(args.graph)
    p = find_ld_partition(g, args.ell, args.d, args.t, mode=args.mode)
    if p is None:
        _emit(args, "no partition found", {"partition": None})
        return 0
    s = sparsify(g, p)
    text = p.describe() + "\nsparsified:\n" + s.to_text().rstrip("\n")
    payload = {
        "partition": {"bags": [list(b) for b in p.bags], "ell": p.ell, "d": p.d, "t": p.t,
                      "kinds": [list(r) for r in p.kinds]},
        "sparsified": {"n": s.n, "edges": [list(e) for e in s.edges()]},
    }
    _emit(args, text, payload)
    return 0


def cmd_antichain(args) -> int:
    c = _load_class(args)
    fam = antichain_family(c, args.count)
    text = "".join(f"graph F{i}\n{g.to_text()}" for i, g in enumerate(fam)).rstrip("\n")
    payload = {"graphs": [{"n": g.n, "edges": [list(e) for e in g.edges()]} for g in fam]}
    _emit(args, text, payload)
    return 0


def cmd_bounds(args) -> int:
    b = bounds_for_m(args.m, form=args.form)
    text = "\n".join(f"{name}: {B.describe(v)}" for name, v in b.items())
    _emit(args, text, {"m": b.m, "form": b.form, **{name: _bound_json(v) for name, v in b.items()}})
    return 0


def cmd_universal(args) -> int:
    u = read_graph(args.graph)
    ok = check_universal(u, args.cls, args.m)
    _emit(args, "true" if ok else "false", {"universal": ok, "class": args.cls, "m": args.m})
    return 0


def cmd_verify_antichain(args) -> int:
    names, graphs = [], []
    for path in args.files:
        with open(path) as fh:
            n, g = parse_graph_blocks(fh.read())
        names += n
        graphs += g
    ok = verify_antichain(graphs)
    _emit(args, "true" if ok else "false", {"antichain": ok, "graphs": names})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bellgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="write the result as JSON")
        p.set_defaults(func=func)
        return p

    p = add("decide", cmd_decide, "above/below-Bell verdict for a class spec file")
    p.add_argument("spec")
    p.add_argument("--max-letters", type=int, default=2)
    p.add_argument("--max-period", type=int, default=4)
    p.add_argument("--speed-n", type=int, default=6)
    p.add_argument("--threads", type=int, default=1, help="0 = one per CPU")

    p = add("speed", cmd_speed, "labelled speed |C^n| of a class")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)

    word_help = "periodic word literal such as '(ab)'"
    h_help = "looped letter graph file (default: letters with no edges)"

    p = add("member", cmd_member, "test membership of a graph in P(w, H)")
    p.add_argument("graph")
    p.add_argument("--word", required=True, help=word_help)
    p.add_argument("--h", help=h_help)
    p.add_argument("--method", choices=["positions", "prefix", "doubled"], default="positions")

    p = add("sparsify", cmd_sparsify, "find an (ell, d)-partition and sparsify")
    p.add_argument("graph")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--mode", choices=["exhaustive", "cluster"], default="exhaustive")

    p = add("antichain", cmd_antichain, "minimal forbidden graphs of P(w, H) of increasing order")
    p.add_argument("--word", required=True, help=word_help)
    p.add_argument("--h", help=h_help)
    p.add_argument("--count", type=int, required=True)

    p = add("bounds", cmd_bounds, "bound functions for forbidden graphs of order m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--form", choices=["display", "compositional"], default="display")

    p = add("universal", cmd_universal, "does a graph contain every m-vertex graph of a minimal class")
    p.add_argument("graph")
    p.add_argument("--class", dest="cls", type=int, required=True, choices=range(1, 14), metavar="J")
    p.add_argument("--m", type=int, required=True)

    p = add("verify-antichain", cmd_verify_antichain, "check that graph blocks are pairwise incomparable")
    p.add_argument("files", nargs="+")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BellGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
