"""``singly`` command line: run, verify, gen, oracle.

Exit codes: 0 success, 1 verification failure (or "NO" from ``verify``),
2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .algorithms import HEURISTICS, Algo4Variant, dfs_once, dfs_once_applies
from .graph import DiGraph, NotAcyclic, is_acyclic, remove_edges
from .ingest import (
    IngestReport,
    ParseError,
    open_edge_list,
    parse_edge_list,
    remove_cycles,
    write_edge_list,
)
from .oracle import Exhausted, Family, GenSpec, InfeasibleSpec, brute_force_min_removal, generate
from .verify import check_by_counting, check_by_dfs

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _read(path: str, cycles: bool) -> tuple[DiGraph, IngestReport]:
    try:
        with open_edge_list(path) as fh:
            g, rep = parse_edge_list(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    if g.m == 0:
        raise InputError(f"{path}: no edges parsed")
    if cycles:
        g, rep.cycle_edges = remove_cycles(g)
    elif not is_acyclic(g)[0]:
        raise InputError(f"{path}: input is not acyclic (use --remove-cycles)")
    return g, rep


def _algorithms(text: str) -> list[str]:
    names = [a.strip() for a in text.split(",") if a.strip()]
    bad = [a for a in names if a not in bench.ALGORITHMS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s): {', '.join(bad)}")
    return names


def cmd_run(args: argparse.Namespace) -> int:
    variant = Algo4Variant(args.algo4_variant)
    timing = not args.no_timing
    rows = []
    status = EXIT_OK
    for path in args.inputs:
        name = Path(path).name.split(".")[0]
        try:
            g, rep = _read(path, cycles=True)
        except InputError as exc:
            _err(str(exc))
            status = EXIT_INPUT
            continue
        print(
            f"{name}: n={g.n} m={g.m} ({', '.join(rep.header())})",
            file=sys.stderr,
        )
        for row, res in bench.bench_graph(name, g, args.algorithms, args.repetitions, variant, timing):
            rows.append(row)
            if args.emit_removals:
                bench.write_removals(Path(args.emit_removals), name, g, res, rep)
    comments = bench.provenance_lines(variant, args.seed, args.repetitions, timing)
    text = bench.to_csv(rows, comments)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.markdown:
        Path(args.markdown).write_text(bench.to_markdown(text))
    if any(not r.verified for r in rows):
        _err("some outputs failed verification")
        return EXIT_FAIL
    return status


def _render_path(g: DiGraph, rep: IngestReport, u: int, path: list[int]) -> str:
    labels = rep.labels
    verts = [u] + [g.heads[e] for e in path]
    return " -> ".join(str(labels[v]) for v in verts)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g, rep = _read(args.input, cycles=args.remove_cycles)
        if args.remove:
            g = remove_edges(g, _lookup_edges(g, rep, args.remove))
    except InputError as exc:
        _err(str(exc))
        return EXIT_INPUT
    by_dfs = check_by_dfs(g)
    by_count = check_by_counting(g)
    if by_dfs.ok and by_count.ok:
        print("YES")
        return EXIT_OK
    print("NO")
    if by_dfs.witness is not None:
        w = by_dfs.witness
        print(f"path 1: {_render_path(g, rep, w.u, w.path)}")
        print(f"path 2: {_render_path(g, rep, w.u, w.other)}")
    if by_dfs.ok != by_count.ok:
        _err("verifiers disagree")
    return EXIT_FAIL


def _lookup_edges(g: DiGraph, rep: IngestReport, path: str) -> set[int]:
    ids = rep.label_to_id
    by_pair = {(g.tails[e], g.heads[e]): e for e in g.edge_ids}
    try:
        with open_edge_list(path) as fh:
            rem, rem_rep = parse_edge_list(fh)
    except (OSError, ParseError) as exc:
        raise InputError(f"{path}: {exc}") from None
    found = set()
    for t, h in rem.pairs():
        a, b = rem_rep.labels[t], rem_rep.labels[h]
        e = by_pair.get((ids.get(a, -1), ids.get(b, -1)))
        if e is None:
            raise InputError(f"{path}: edge ({a}, {b}) is not in the input graph")
        found.add(e)
    return found


def cmd_gen(args: argparse.Namespace) -> int:
    family = Family(args.family)
    m = args.m if args.m is not None else (args.n if family is Family.THEOREM1 else None)
    if m is None:
        _err("--m is required for this family")
        return EXIT_INPUT
    spec = GenSpec(args.n, m, args.seed, family, args.layers, args.top)
    try:
        g = generate(spec)
    except InfeasibleSpec as exc:
        _err(f"infeasible spec: {exc}")
        return EXIT_INPUT
    header = [f"generated: {spec.describe()}", f"n={g.n} m={g.m}"]
    if args.output:
        with open(args.output, "w") as fh:
            write_edge_list(g, fh, header=header)
    else:
        write_edge_list(g, sys.stdout, header=header)
    return EXIT_OK


def _ratio(h: int, opt: int | None) -> str:
    if opt is None or opt == 0:
        return "n/a"
    return f"{h / opt:.2f}x"


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g, rep = _read(args.input, cycles=args.remove_cycles)
    except InputError as exc:
        _err(str(exc))
        return EXIT_INPUT
    best = brute_force_min_removal(g, args.budget)
    opt = None if isinstance(best, Exhausted) else best.size
    parts = [f"optimum={opt}" if opt is not None else f"optimum=EXHAUSTED (budget {args.budget})"]
    runners = dict(HEURISTICS)
    if dfs_once_applies(g):
        runners["dfs_once"] = dfs_once
    for name, fn in runners.items():
        size = fn(g).size
        parts.append(f"{name}={size} ({_ratio(size, opt)})")
    print("; ".join(parts))
    if opt is not None:
        labels = rep.labels
        edges = ", ".join(f"({labels[g.tails[e]]},{labels[g.heads[e]]})" for e in best.removed)
        print(f"H = {{{edges}}}")
    else:
        print(f"no removal set of size <= {args.budget}; raise --budget to search further")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="singly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run algorithms on edge-list files and write a CSV table")
    r.add_argument("inputs", nargs="+")
    r.add_argument("--algorithms", type=_algorithms, default=list(bench.ALGORITHMS))
    r.add_argument("--repetitions", type=int, default=3)
    r.add_argument("--algo4-variant", choices=[v.value for v in Algo4Variant], default="prose")
    r.add_argument("--emit-removals", metavar="DIR")
    r.add_argument("--seed", type=int)
    r.add_argument("--no-timing", action="store_true", help="write NA for time_ms")
    r.add_argument("-o", "--output")
    r.add_argument("--markdown", metavar="PATH")
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("verify", help="decide whether a DAG is singly connected")
    v.add_argument("input")
    v.add_argument("--remove-cycles", action="store_true")
    v.add_argument("--remove", metavar="EDGES", help="edge list to delete before checking")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a seeded random DAG")
    g.add_argument("--family", choices=[f.value for f in Family], default="dag")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--layers", type=int, default=2)
    g.add_argument("--top", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    o = sub.add_parser("oracle", help="exact optimum by exhaustive search, next to each heuristic")
    o.add_argument("input")
    o.add_argument("--budget", type=int, default=5)
    o.add_argument("--remove-cycles", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAcyclic as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
