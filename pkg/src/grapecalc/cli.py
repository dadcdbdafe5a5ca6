"""Command-line front end: thin argument parsing over the library."""

from __future__ import annotations

import argparse
import json
import sys

from . import covers, fibers, monodromy, slips
from .data import data_dir, list_clusters, load_cluster_ref, load_named_cluster
from .hexgrapes import render_svg
from .monodromy import FiberType, SL2Matrix
from .report import SECTIONS, verify_paper


def _add_verify_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--data-dir", default=None,
                   help="cluster/tree data directory (default: packaged; "
                        "GRAPECALC_DATA overrides)")
    p.add_argument("--max-depth", type=int, default=7,
                   help="search depth for the slip derivation (default 7)")
    p.add_argument("--symmetry", choices=("translation", "full"),
                   default="translation",
                   help="cluster identification used by the search")
    p.add_argument("--report", choices=("text", "structured"), default="text")
    p.add_argument("--only", action="append", choices=SECTIONS, default=None,
                   help="restrict to a report section (repeatable)")


def _run_verify(args) -> int:
    report = verify_paper(data_dir=args.data_dir, only=args.only,
                          max_depth=args.max_depth, symmetry=args.symmetry)
    if args.report == "structured":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text(), end="")
    return 0 if report.all_passed else 1


def verify_paper_main(argv=None) -> int:
    p = argparse.ArgumentParser(
        prog="verify-paper",
        description="Run the full verification suite and exit 0 iff it passes.")
    _add_verify_args(p)
    return _run_verify(p.parse_args(argv))


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="grapecalc")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("verify-paper", help="run the verification suite")
    _add_verify_args(sp)

    sp = sub.add_parser("clusters", help="list shipped clusters")
    sp.add_argument("--data-dir", default=None)

    sp = sub.add_parser("form", help="print the linking form of a cluster")
    sp.add_argument("cluster", help="cluster name or .grapes path")
    sp.add_argument("--data-dir", default=None)

    sp = sub.add_parser("render", help="draw a cluster as SVG")
    sp.add_argument("cluster")
    sp.add_argument("--out", required=True)
    sp.add_argument("--data-dir", default=None)

    covers_p = sub.add_parser("covers", help="branched-cover forms and oracle")
    csub = covers_p.add_subparsers(dest="covers_cmd", required=True)
    sp = csub.add_parser("form", help="emit the cover intersection form")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--out", default=None)
    csub.add_parser("oracle", help="run the Alexander identity suite")

    mono_p = sub.add_parser("monodromy", help="word evaluation and classification")
    msub = mono_p.add_subparsers(dest="mono_cmd", required=True)
    sp = msub.add_parser("eval", help="evaluate a word over U,V")
    sp.add_argument("word")
    sp = msub.add_parser("classify", help="classify a 2x2 integer matrix")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("c", type=int)
    sp.add_argument("d", type=int)

    fib_p = sub.add_parser("fibers", help="singular fiber catalog and pipelines")
    fsub = fib_p.add_subparsers(dest="fibers_cmd", required=True)
    sp = fsub.add_parser("catalog", help="show a fiber's catalog entry")
    sp.add_argument("type")
    sp = fsub.add_parser("blowdown", help="run a quotient blowdown pipeline")
    sp.add_argument("--pipeline", required=True, choices=("II", "III", "IV"))
    sp = fsub.add_parser("degeneration", help="validate a bubble tree")
    sp.add_argument("--type", dest="fiber_type", required=True)
    sp.add_argument("--tree", default=None,
                    help="tree file (defaults to the built-in transcription)")

    slips_p = sub.add_parser("slips", help="slip moves, traces, search")
    ssub = slips_p.add_subparsers(dest="slips_cmd", required=True)
    sp = ssub.add_parser("moves", help="list legal moves of a cluster")
    sp.add_argument("cluster")
    sp.add_argument("--data-dir", default=None)
    sp = ssub.add_parser("replay", help="validate every step of a trace file")
    sp.add_argument("trace")
    sp.add_argument("--data-dir", default=None)
    sp = ssub.add_parser("search", help="breadth-first slip search")
    sp.add_argument("start")
    sp.add_argument("goal")
    sp.add_argument("--max-depth", type=int, default=7)
    sp.add_argument("--symmetry", choices=("translation", "full"),
                    default="translation")
    sp.add_argument("--data-dir", default=None)
    sp.add_argument("--out", default=None, help="write the trace file here")

    sp = sub.add_parser("serve", help="run the session service")
    sp.add_argument("--port", type=int, default=8763)
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--data-dir", default=None)

    args = p.parse_args(argv)

    if args.cmd == "verify-paper":
        return _run_verify(args)

    if args.cmd == "clusters":
        for name in list_clusters(args.data_dir):
            print(name)
        return 0

    if args.cmd == "form":
        cluster = load_cluster_ref(args.cluster, args.data_dir)
        print(cluster.linking_form().to_text(), end="")
        return 0

    if args.cmd == "render":
        cluster = load_cluster_ref(args.cluster, args.data_dir)
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(render_svg(cluster))
        print(f"wrote {args.out}")
        return 0

    if args.cmd == "covers":
        if args.covers_cmd == "form":
            V = covers.seifert_matrix(args.q, args.r)
            cf = covers.cover_form(V, args.p)
            text = cf.form.to_text()
            if args.out:
                with open(args.out, "w", encoding="utf-8") as f:
                    f.write(text)
                print(f"wrote {args.out}")
            else:
                print(text, end="")
            return 0
        ok_all = True
        for case, ok in covers.oracle_report():
            ok_all &= ok
            print(f"[{'PASS' if ok else 'FAIL'}] Alexander identity for {case}")
        return 0 if ok_all else 1

    if args.cmd == "monodromy":
        if args.mono_cmd == "eval":
            m = monodromy.evaluate(args.word)
            print(f"[[{m.a}, {m.b}], [{m.c}, {m.d}]]")
            print(f"trace {m.trace()}  class {monodromy.classify(m)}")
            return 0
        m = SL2Matrix(args.a, args.b, args.c, args.d)
        if m.det() != 1:
            print(f"determinant {m.det()} != 1", file=sys.stderr)
            return 1
        print(monodromy.classify(m))
        return 0

    if args.cmd == "fibers":
        if args.fibers_cmd == "catalog":
            t = FiberType.parse(args.type)
            entry = fibers.catalog(t)
            print(f"type {t}: word {entry.word}, euler {entry.euler}")
            print("configuration:")
            print(entry.config.to_text(), end="")
            if entry.plumbing is not None:
                weights = entry.plumbing.weight_vector()
                print(f"plumbing tree on {len(weights)} vertices, "
                      f"multiplicities {list(weights)}")
            return 0
        if args.fibers_cmd == "blowdown":
            t = FiberType.parse(args.pipeline)
            stages, final = fibers.blow_down_pipeline(t)
            for k, cfg in enumerate(stages):
                tag = "start" if k == 0 else f"after blowdown {k}"
                print(f"-- {tag} --")
                print(cfg.to_text(), end="")
            return 0
        t = FiberType.parse(args.fiber_type)
        if args.tree:
            with open(args.tree, encoding="utf-8") as f:
                tree = fibers.BubbleTree.from_text(f.read())
        else:
            tree = fibers.degeneration_tree(t)
        config = fibers.catalog(t).config
        problems = fibers.validate_degeneration(tree, config)
        if problems:
            for prob in problems:
                print(f"INVALID: {prob}")
            return 1
        print("valid degeneration")
        return 0

    if args.cmd == "slips":
        if args.slips_cmd == "moves":
            cluster = load_cluster_ref(args.cluster, args.data_dir)
            for mv in slips.enumerate_moves(cluster):
                print(mv.to_line())
            return 0
        if args.slips_cmd == "replay":
            with open(args.trace, encoding="utf-8") as f:
                text = f.read()
            trace = slips.SlipTrace.from_text(
                text, resolve_cluster=lambda name: load_named_cluster(name, args.data_dir))
            snaps = trace.replay()
            print(f"replayed {len(trace)} moves from "
                  f"{trace.start_name or 'inline cluster'}")
            final = snaps[-1] if snaps else trace.start
            print(final.to_text(), end="")
            return 0
        start = load_cluster_ref(args.start, args.data_dir)
        goal = load_cluster_ref(args.goal, args.data_dir)
        trace = slips.search(start, goal, args.max_depth, args.symmetry)
        if trace is None:
            print(f"no slip sequence within depth {args.max_depth}")
            return 1
        print(f"found a sequence of {len(trace)} slips")
        for mv in trace.moves:
            print(mv.to_line())
        if args.out:
            named = slips.SlipTrace(start=trace.start, moves=trace.moves,
                                    start_name=args.start)
            with open(args.out, "w", encoding="utf-8") as f:
                f.write(named.to_text())
            print(f"wrote {args.out}")
        return 0

    if args.cmd == "serve":
        from .service import run
        run(port=args.port, data_dir=args.data_dir, host=args.host)
        return 0

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
