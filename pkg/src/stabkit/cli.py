"""``stabkit`` command-line interface.

Exit status: 0 on success / all claims passing, 1 when a check fails,
2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .constructions import ConstructionError, gen_matching_cex, gen_tree_cex, gen_tree_cex_9, gen_tri_cex
from .fileio import InputError, graph_json, load_graph, load_points, points_json, write_json
from .geom_graph import max_stabbing_partition
from .search import (
    DEFAULT_WITNESS_CAP,
    min_stab_matching,
    min_stab_path,
    min_stab_tree,
    min_stab_triangulation,
)
from .stab_lines import RepresentativeSetError, representative_partitions
from .svg import render_svg
from .verify import TARGETS, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_SEARCHERS = {
    "tree": min_stab_tree,
    "path": min_stab_path,
    "matching": min_stab_matching,
    "triangulation": min_stab_triangulation,
}


def _fmt_side(idx) -> str:
    return "[" + ", ".join(map(str, idx)) + "]"


def cmd_lines(args) -> int:
    P = load_points(args.points)
    H = representative_partitions(P)
    for b in H:
        print(f"{_fmt_side(b.side_a)} | {_fmt_side(b.side_b)}")
    print(f"total: {len(H)}")
    return EXIT_OK


def cmd_stab(args) -> int:
    G = load_graph(args.graph)
    s, b = max_stabbing_partition(G)
    print(f"stabbing number: {s}")
    if b is not None:
        print(f"partition: {_fmt_side(b.side_a)} | {_fmt_side(b.side_b)}")
    return EXIT_OK


def cmd_minstab(args) -> int:
    P = load_points(args.points)
    kw = {"mode": args.mode, "witness_cap": args.witness_cap}
    if args.graph_class == "tree":
        kw["threads"] = args.threads
    out = _SEARCHERS[args.graph_class](P, **kw)
    print(json.dumps(out.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "tree9":
        b = gen_tree_cex_9()
    elif args.kind == "tree":
        b = gen_tree_cex(_need(args.n, "--n"))
    elif args.kind == "tri":
        b = gen_tri_cex(_need(args.n, "--n"))
    else:
        b = gen_matching_cex(_need(args.k, "--k"))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_json(out / "small.json", {**points_json(b.small), "labels": b.small_labels})
    write_json(out / "big.json", {**points_json(b.big), "labels": list(b.labels)})
    write_json(out / "witness.json", {**graph_json(b.witness), "labels": list(b.labels)})
    report = {"kind": b.kind, "removed": list(b.removed), "params": b.params, **b.validation.to_dict()}
    write_json(out / "validation.json", report)
    for c in b.validation.failures:
        print(f"[FAIL] {c.name}: {c.detail}")
    print(f"{b.kind}: {len(b.big)} points, validation {'PASS' if b.validation.passed else 'FAIL'} -> {out}")
    return EXIT_OK if b.validation.passed else EXIT_FAIL


def _need(v, flag: str) -> int:
    if v is None:
        raise InputError(f"{flag} is required for this construction")
    return v


def cmd_verify(args) -> int:
    kw: dict = {}
    t = args.target
    if t in ("lemma-3.2", "lemma-3.4"):
        kw["threads"] = args.threads
    if t == "lemma-3.4" and args.n is not None:
        kw["n_max"] = args.n
    if t == "lemma-4.1" and args.n is not None:
        kw["n_small"] = args.n
    if t == "lemma-5.1" and args.k is not None:
        kw["k"] = args.k
    if t == "corollary-2.2":
        kw.update(seed=args.seed, trials=args.trials)
        if args.n is not None:
            kw["n_max"] = args.n
    rep = run(t, **kw)
    for line in rep.summary_lines():
        print(line)
    if args.out:
        write_json(args.out, rep.to_dict())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_svg(args) -> int:
    G = load_graph(args.graph)
    b = max_stabbing_partition(G)[1] if args.overlay else None
    Path(args.out).write_text(render_svg(G, b))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stabkit", description="Stabbing numbers of planar geometric graphs.")
    p.add_argument("--version", action="version", version=f"stabkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lines", help="list the representative line partitions of a point set")
    s.add_argument("points")
    s.set_defaults(func=cmd_lines)

    s = sub.add_parser("stab", help="stabbing number of a geometric graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_stab)

    s = sub.add_parser("minstab", help="minimum stabbing number over a graph class")
    s.add_argument("points")
    s.add_argument("--class", dest="graph_class", choices=sorted(_SEARCHERS), default="tree")
    s.add_argument("--mode", choices=["exhaustive", "bnb"], default="exhaustive")
    s.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    s.add_argument("--threads", type=int, default=1, help="worker processes (exhaustive tree search)")
    s.set_defaults(func=cmd_minstab)

    s = sub.add_parser("gen", help="generate a counterexample pair")
    s.add_argument("kind", choices=["tree9", "tree", "tri", "matching"])
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="re-check a non-monotonicity result")
    s.add_argument("target", choices=TARGETS)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--out", help="write the report as JSON")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("svg", help="draw a graph file as SVG")
    s.add_argument("graph")
    s.add_argument("--out", required=True)
    s.add_argument("--overlay", action="store_true", help="draw a line for one maximizing partition")
    s.set_defaults(func=cmd_svg)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ConstructionError, RepresentativeSetError) as exc:
        # InputError, GeometryError, GraphError, SearchError and VerificationError are ValueErrors
        print(f"stabkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
