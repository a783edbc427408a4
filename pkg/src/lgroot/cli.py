"""Command-line entry point: ``lgroot <command> ...``.

Exit codes: 0 success, 1 usage or I/O error, 2 input is not a line graph,
3 internal disagreement between checks.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import (BenchAborted, BenchConfig, format_summary, run_bench, summarize,
                    write_histograms, write_records)
from .errors import DisconnectedInput, NotALineGraph
from .graph import ISO_NODE_LIMIT, Graph, SymBitMatrix, generate_er, isomorphic_small, lam_of, line_graph
from .io import ParseError, format_edge_list, format_matrix, parse_graph_text
from .reconstruct import format_mapping, reconstruct
from .reference.beineke import BEINEKE_NODE_LIMIT, beineke_graphs, find_beineke_subgraph
from .reference.spectral import smallest_eigenvalue

EXIT_OK, EXIT_IO, EXIT_NOT_LINE, EXIT_DISAGREE = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _env_seed() -> int:
    raw = os.environ.get("LG_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise _Fail(EXIT_IO, f"LG_SEED must be an integer, got {raw!r}") from None


def _read(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph_text(text, "<stdin>" if path == "-" else path)
    except ParseError as exc:
        raise _Fail(EXIT_IO, str(exc)) from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def cmd_generate(args) -> int:
    seed = _env_seed() if args.seed is None else args.seed
    try:
        g = generate_er(args.nodes, args.prob, seed)
    except ValueError as exc:
        raise _Fail(EXIT_IO, str(exc)) from None
    _write(args.output, format_edge_list(g, f"G({args.nodes}, {args.prob:g}) seed={seed}"))
    return EXIT_OK


def cmd_linegraph(args) -> int:
    g = _read(args.input)
    c = lam_of(g)
    _write(args.output, format_matrix(c) if args.format == "matrix" else format_edge_list(c.to_graph()))
    return EXIT_OK


def _is_connected(c: SymBitMatrix) -> bool:
    return len(c.component_masks()) <= 1


def cmd_reconstruct(args) -> int:
    c = _read(args.input).adjacency()
    if not args.allow_disconnected and not _is_connected(c):
        raise _Fail(EXIT_IO, "input is disconnected; pass --allow-disconnected to solve each component")
    try:
        rep = reconstruct(c, strict=not args.fast)
    except NotALineGraph as exc:
        print(f"not a line graph: {exc} (component {exc.component}, stage {exc.stage})",
              file=sys.stderr)
        return EXIT_NOT_LINE
    note = f"root of a {c.order}-node line graph, {rep.component_count} component(s)"
    if rep.ambiguous_k3:
        note += "\ntriangle component: star root chosen, the triangle is equally valid"
    if not rep.verified:
        note += "\nfast mode: some components were not verified"
    _write(args.output, format_edge_list(rep.root, note))
    if args.mapping:
        _write(args.mapping, format_mapping(rep))
    return EXIT_OK


def check_graph(g: Graph) -> tuple[list[str], int]:
    """Verdict lines and exit code for the line-graph test of ``g``."""
    c = g.adjacency()
    lines = []
    spectral_no = False
    if c.order:
        lam = smallest_eigenvalue(c)
        spectral_no = lam < -2.0 - 1e-9
        lines.append(f"spectral: {'reject' if spectral_no else 'no decision'} (smallest eigenvalue {lam:.6f})")
    else:
        lines.append("spectral: skipped (empty graph)")

    beineke_yes = None
    if g.node_count <= BEINEKE_NODE_LIMIT:
        hit = find_beineke_subgraph(g)
        beineke_yes = hit is None
        if hit is None:
            lines.append("beineke: no forbidden induced subgraph")
        else:
            name = beineke_graphs()[hit[0]][0]
            nodes = " ".join(map(str, hit[1]))
            lines.append(f"beineke: forbidden induced subgraph {name} on nodes {nodes}")
    else:
        lines.append(f"beineke: skipped (more than {BEINEKE_NODE_LIMIT} nodes)")

    try:
        rep = reconstruct(c)
        root = rep.root
        lines.append(f"reconstruction: verified root with {root.node_count} nodes and {root.edge_count} edges")
        recon_yes = True
    except NotALineGraph as exc:
        lines.append(f"reconstruction: {exc} (stage {exc.stage})")
        recon_yes = False

    if (spectral_no and recon_yes) or (beineke_yes is not None and beineke_yes != recon_yes):
        lines.append("line graph: checks disagree")
        return lines, EXIT_DISAGREE
    if recon_yes:
        edges = ", ".join(f"{u}-{v}" for u, v in root.edges)
        lines.append(f"line graph: yes (root: {root.node_count} nodes; {edges})")
        return lines, EXIT_OK
    lines.append("line graph: no")
    return lines, EXIT_NOT_LINE


def cmd_check(args) -> int:
    lines, code = check_graph(_read(args.input))
    print("\n".join(lines))
    return code


def _without_isolated(g: Graph) -> Graph:
    used = sorted({v for e in g.edges for v in e})
    pos = {v: k for k, v in enumerate(used)}
    return Graph(len(used), tuple((pos[u], pos[v]) for u, v in g.edges))


def cmd_roundtrip(args) -> int:
    seed = _env_seed() if args.seed is None else args.seed
    bad = 0
    for t in range(args.trials):
        s = seed + t
        g = generate_er(args.nodes, args.prob, s)
        lg = line_graph(g)
        c = lg.adjacency()
        try:
            rep = reconstruct(c)
            ok = rep.verified and lam_of(rep.root) == c
            core = _without_isolated(g)
            if ok and core.node_count <= ISO_NODE_LIMIT and not rep.ambiguous_k3:
                ok = isomorphic_small(core, rep.root)
        except NotALineGraph as exc:
            ok = False
            print(f"seed {s}: {exc}", file=sys.stderr)
        if not ok:
            bad += 1
            print(f"seed {s}: round trip failed", file=sys.stderr)
    print(f"roundtrip: {args.trials - bad}/{args.trials} recovered "
          f"(G({args.nodes}, {args.prob:g}), seeds {seed}..{seed + args.trials - 1})")
    return EXIT_OK if bad == 0 else EXIT_DISAGREE


def _csv_list(cast):
    def parse(text: str):
        return tuple(cast(v) for v in text.split(",") if v.strip())
    return parse


def cmd_bench(args) -> int:
    try:
        config = BenchConfig.from_sources(
            args.config,
            node_counts=args.node_counts,
            probabilities=args.probabilities,
            trials=args.trials,
            seed=args.seed,
            warmup=args.warmup,
            repeats=args.repeats,
            timer=args.timer,
        )
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read config: {exc.strerror}") from None
    except (ValueError, TypeError) as exc:
        raise _Fail(EXIT_IO, f"bad bench configuration: {exc}") from None

    def progress(rec):
        if args.verbose:
            print(f"n_g={rec.n_g} p={rec.p:g} trial={rec.trial} dT={rec.delta_t}ns", file=sys.stderr)

    try:
        records = run_bench(config, progress)
    except BenchAborted as exc:
        print(f"bench aborted: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    try:
        write_records(records, args.output, config)
        if args.histograms:
            write_histograms(records, args.histograms, args.bins)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write results: {exc.strerror}") from None
    table = format_summary(summarize(records))
    _write(args.summary, table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lgroot", description="Recover root graphs from line graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write an Erdos-Renyi graph as an edge list")
    p.add_argument("--nodes", "-n", type=int, required=True)
    p.add_argument("--prob", "-p", type=float, required=True)
    p.add_argument("--seed", type=int, help="default: $LG_SEED or 0")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("linegraph", help="write the line graph of a root graph")
    p.add_argument("input")
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--format", choices=("edges", "matrix"), default="edges")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("reconstruct", help="recover the root of a line graph")
    p.add_argument("input", help="matrix or edge list of the line graph")
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--mapping", help="write '<link>,<endA>,<endB>' lines here")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", default=True,
                      help="verify every component (default)")
    mode.add_argument("--fast", action="store_true", help="skip verification where it is optional")
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("check", help="decide whether a graph is a line graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time reconstruction against the Krausz baseline")
    p.add_argument("--config", help="'key = value' file; flags override it")
    p.add_argument("--node-counts", type=_csv_list(int))
    p.add_argument("--probabilities", type=_csv_list(float))
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, help="default: $LG_SEED or 0")
    p.add_argument("--warmup", type=int)
    p.add_argument("--repeats", type=int)
    p.add_argument("--timer")
    p.add_argument("--output", "-o", default="bench.csv")
    p.add_argument("--summary", default="-")
    p.add_argument("--histograms", help="directory for per-cell histogram CSVs")
    p.add_argument("--bins", type=int, default=20)
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("roundtrip", help="generate, take line graphs, reconstruct, compare")
    p.add_argument("--nodes", "-n", type=int, default=10)
    p.add_argument("--prob", "-p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, help="default: $LG_SEED or 0")
    p.set_defaults(func=cmd_roundtrip)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_IO if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"lgroot: {exc}", file=sys.stderr)
        return exc.code
    except DisconnectedInput as exc:
        print(f"lgroot: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
