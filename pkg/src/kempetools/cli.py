"""Command-line front end.

Subcommands: gen (corpus generation), classes (Kempe-class reports),
solve (single-pair constructive witness), verify (corpus verification
campaign), analyze (structural reports).  Reports are JSON lines; the
--figures flag additionally renders summary figures beside them.

Exit codes: 0 all pass, 1 verification/equivalence failure, 2 usage or
format error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .classes import VerifyRow, kempe_classes, verify_corpus
from .coloring import (
    DEFAULT_CEILING,
    Coloring,
    chain_sizes_of_sequence,
    enumerate_colorings,
    replay,
    validate_sequence,
)
from .errors import (
    CeilingExceededError,
    GraphFormatError,
    KempetoolsError,
    NotEquivalentError,
)
from .generate import gen_cubic
from .graph import (
    Graph,
    degeneracy,
    encode_graph6,
    find_claw,
    find_induced_motif,
    find_min_separator,
    find_net,
    is_connected,
    is_cubic,
    parse_edgelist,
    parse_graph6,
)
from .jsonio import (
    class_report_to_obj,
    coloring_from_obj,
    sequence_to_obj,
    trace_to_obj,
    verify_row_to_obj,
)
from .solver import solve


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def read_graphs(path: str) -> list[Graph]:
    """Load graphs from a file or stdin: graph6, one word per line, or a
    single edge-list ('n m' header then edge lines)."""
    text = _read_text(path)
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError(f"no graphs in {path!r}")
    head = lines[0].split()
    if len(head) == 2 and all(p.isdigit() for p in head):
        return [parse_edgelist(text)]
    return [parse_graph6(ln) for ln in lines]


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _emit_lines(out_path: str | None, objs) -> None:
    fh, close = _open_out(out_path)
    try:
        for obj in objs:
            fh.write(json.dumps(obj, sort_keys=True) + "\n")
    finally:
        if close:
            fh.close()


# ---------------------------------------------------------------------------
# Subcommands


def cmd_gen(args) -> int:
    graphs = gen_cubic(args.n)
    fh, close = _open_out(args.out)
    try:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
    finally:
        if close:
            fh.close()
    return 0


def cmd_classes(args) -> int:
    graphs = read_graphs(args.input)
    reports = []
    objs = []
    for g in graphs:
        report, _ = kempe_classes(g, args.k, args.ceiling)
        reports.append(report)
        obj = class_report_to_obj(report)
        if not args.representatives:
            obj.pop("representatives")
        objs.append(obj)
    _emit_lines(args.out, objs)
    if args.figures:
        from . import plots

        plots.save_class_sizes_figure(
            reports, plots.figure_path(args.figures, "class_sizes.png")
        )
    return 0


def _load_pair(path: str) -> tuple[Coloring, Coloring]:
    obj = json.loads(_read_text(path))
    if isinstance(obj, dict) and "alpha" in obj and "beta" in obj:
        return coloring_from_obj(obj["alpha"]), coloring_from_obj(obj["beta"])
    if isinstance(obj, list) and len(obj) == 2:
        return coloring_from_obj(obj[0]), coloring_from_obj(obj[1])
    raise GraphFormatError(
        'pair file must be {"alpha": ..., "beta": ...} or a two-element list'
    )


def cmd_solve(args) -> int:
    graphs = read_graphs(args.input)
    if len(graphs) != 1:
        raise GraphFormatError("solve expects exactly one input graph")
    g = graphs[0]
    alpha, beta = _load_pair(args.pair)
    try:
        seq, trace = solve(g, alpha, beta, k=args.k, ceiling=args.ceiling)
    except NotEquivalentError as exc:
        obj = {"equivalent": False, "reason": str(exc)}
        _emit_lines(args.out, [obj])
        return 1
    violation = validate_sequence(g, seq)
    if violation is not None or replay(g, seq).colors != beta.colors:
        _emit_lines(args.out, [{"equivalent": None, "error": "witness failed validation"}])
        return 1
    obj = {
        "equivalent": True,
        "witness": sequence_to_obj(seq),
        "trace": trace_to_obj(trace, len(seq.moves)),
    }
    _emit_lines(args.out, [obj])
    if args.figures:
        from . import plots

        plots.save_witness_figure(
            chain_sizes_of_sequence(g, seq),
            plots.figure_path(args.figures, "witness_profile.png"),
        )
    return 0


def _verify_one(payload) -> dict:
    g6, k, ceiling, solve_pairs, seed = payload
    g = parse_graph6(g6)
    rows, _ = verify_corpus([g], k=k, ceiling=ceiling)
    row = rows[0]
    obj = verify_row_to_obj(row)
    if (
        solve_pairs
        and row.verdict == "PASS"
        and row.colorings > 0
        and row.classes == 1
    ):
        rng = random.Random(seed)
        colorings = enumerate_colorings(g, k, ceiling)
        failures = 0
        for _ in range(solve_pairs):
            a = rng.randrange(len(colorings))
            b = rng.randrange(len(colorings))
            try:
                seq, _tr = solve(g, colorings[a], colorings[b], k=k, ceiling=ceiling)
                if (
                    validate_sequence(g, seq) is not None
                    or replay(g, seq).colors != colorings[b].colors
                ):
                    failures += 1
            except KempetoolsError:
                failures += 1
        obj["solver_pairs"] = solve_pairs
        obj["solver_failures"] = failures
        if failures:
            obj["verdict"] = "FAIL"
    return obj


def cmd_verify(args) -> int:
    graphs: list[Graph] = []
    if args.gen:
        for n in args.gen:
            graphs.extend(gen_cubic(n))
    if args.input:
        graphs.extend(read_graphs(args.input))
    if not graphs:
        raise GraphFormatError("verify needs --input and/or --gen")
    payloads = [
        (encode_graph6(g), args.k, args.ceiling, args.solve_pairs, args.seed + i)
        for i, g in enumerate(graphs)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            objs = list(pool.map(_verify_one, payloads))
    else:
        objs = [_verify_one(p) for p in payloads]
    summary = {
        "graphs": len(objs),
        "pass": sum(o["verdict"] == "PASS" for o in objs),
        "fail": sum(o["verdict"] == "FAIL" for o in objs),
        "skip": sum(o["verdict"] == "SKIP" for o in objs),
    }
    _emit_lines(args.out, objs + [{"summary": summary}])
    if args.figures:
        from . import plots

        rows = [
            VerifyRow(
                o["graph6"],
                o["n"],
                o["colorings"],
                o["classes"],
                tuple(o["sizes"]),
                o["verdict"],
            )
            for o in objs
        ]
        plots.save_verify_figure(rows, plots.figure_path(args.figures, "verify.png"))
    return 1 if summary["fail"] else 0


def _analyze_one(payload) -> tuple[dict, object]:
    g6, k, ceiling = payload
    g = parse_graph6(g6)
    claw = find_claw(g)
    net = find_net(g)
    obj = {
        "graph6": g6,
        "n": g.n,
        "m": len(g.edges),
        "cubic": is_cubic(g),
        "connected": is_connected(g),
        "degeneracy": degeneracy(g).d,
        "claw": list(claw.leaves) + [claw.center] if claw else None,
        "net": list(net.t_vertices + net.p_vertices) if net else None,
        "house": list(find_induced_motif(g, "house") or []) or None,
        "diamond": list(find_induced_motif(g, "diamond") or []) or None,
    }
    if g.n >= 4 and is_connected(g):
        sep = find_min_separator(g, 2)
        obj["three_connected"] = sep is None
        obj["min_separator"] = list(sep.vertices) if sep else None
    else:
        obj["three_connected"] = False
        obj["min_separator"] = None
    report = None
    try:
        report, _ = kempe_classes(g, k, ceiling, graph_id=g6)
        obj["colorings"] = report.colorings
        obj["classes"] = report.classes
        obj["sizes"] = list(report.sizes)
    except CeilingExceededError:
        obj["colorings"] = None
        obj["classes"] = None
        obj["sizes"] = None
        obj["note"] = "enumeration ceiling exceeded"
    return obj, report


def cmd_analyze(args) -> int:
    graphs = read_graphs(args.input)
    payloads = [(encode_graph6(g), args.k, args.ceiling) for g in graphs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_analyze_one, payloads))
    else:
        results = [_analyze_one(p) for p in payloads]
    _emit_lines(args.out, [obj for obj, _ in results])
    if args.figures:
        from . import plots

        reports = [rep for _, rep in results if rep is not None]
        if reports:
            plots.save_class_sizes_figure(
                reports, plots.figure_path(args.figures, "class_sizes.png")
            )
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kempetools",
        description="Kempe-chain recolouring toolkit for small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_jobs=False, with_seed=False):
        p.add_argument("--k", type=int, default=3, help="number of colours")
        p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING,
                       help="max colourings to enumerate per graph")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--figures", default=None, metavar="DIR",
                       help="also render figures into DIR")
        if with_jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel workers over graphs")
        if with_seed:
            p.add_argument("--seed", type=int, default=0,
                           help="seed for sampled-pair modes")

    p_gen = sub.add_parser("gen", help="generate all connected cubic graphs")
    p_gen.add_argument("--n", type=int, required=True, help="even vertex count, 4..10")
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_classes = sub.add_parser("classes", help="Kempe-class report per graph")
    p_classes.add_argument("--input", required=True, help="graph6/edge-list path or -")
    p_classes.add_argument("--representatives", action="store_true",
                           help="include class representatives in the report")
    common(p_classes)
    p_classes.set_defaults(func=cmd_classes)

    p_solve = sub.add_parser("solve", help="constructive witness for one pair")
    p_solve.add_argument("--input", required=True, help="graph6/edge-list path or -")
    p_solve.add_argument("--pair", required=True,
                         help="JSON file with the two colourings")
    common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="class-count verification campaign")
    p_verify.add_argument("--input", default=None, help="graph6/edge-list path or -")
    p_verify.add_argument("--gen", type=int, nargs="*", default=None,
                          help="also verify generated corpora for these n")
    p_verify.add_argument("--solve-pairs", type=int, default=0, metavar="N",
                          help="also run the solver on N sampled pairs per graph")
    common(p_verify, with_jobs=True, with_seed=True)
    p_verify.set_defaults(func=cmd_verify)

    p_analyze = sub.add_parser("analyze", help="structural and class report")
    p_analyze.add_argument("--input", required=True, help="graph6/edge-list path or -")
    common(p_analyze, with_jobs=True)
    p_analyze.set_defaults(func=cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"kempetools: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
