"""Benchmark rows: ingest, run, verify, tabulate."""

from __future__ import annotations

import csv
import io
import os
import platform
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .algorithms import (
    HEURISTICS,
    Algo4Variant,
    RemovalResult,
    algo4_from_medials,
    dfs_once,
    dfs_once_applies,
)
from .graph import DiGraph, remove_edges, restrict
from .ingest import IngestReport, write_edge_list
from .verify import check_by_counting, check_by_dfs

CSV_HEADER = ("dataset", "n", "m", "algorithm", "edges_removed", "edges_remaining", "time_ms", "verified")
ALGORITHMS = ("algo1", "algo2", "algo3", "algo4", "dfs_once")
ORDER_POLICY = "roots ascending, neighbors ascending by head id"


@dataclass
class BenchRow:
    dataset: str
    n: int
    m: int
    algorithm: str
    edges_removed: int
    edges_remaining: int
    time_ms: float | None
    verified: bool

    def cells(self) -> list[str]:
        t = "NA" if self.time_ms is None else f"{self.time_ms:.3f}"
        return [
            self.dataset,
            str(self.n),
            str(self.m),
            self.algorithm,
            str(self.edges_removed),
            str(self.edges_remaining),
            t,
            "true" if self.verified else "false",
        ]


def machine_line() -> str:
    cpu = platform.processor() or platform.machine() or "unknown"
    return f"machine: {cpu}; {os.cpu_count()} cpus; {platform.system()} {platform.release()}; python {platform.python_version()}"


def _runner(name: str, variant: Algo4Variant) -> Callable[[DiGraph], RemovalResult]:
    if name == "dfs_once":
        return dfs_once
    if name == "algo4":
        return lambda g: algo4_from_medials(g, variant)
    return HEURISTICS[name]


def verified(g: DiGraph, res: RemovalResult) -> bool:
    """Both deciders accept the output, and it really is ``g`` minus the removals."""
    if res.certifies_input and res.graph != remove_edges(g, res.removed):
        return False
    return check_by_dfs(res.graph).ok and check_by_counting(res.graph).ok


def bench_graph(
    dataset: str,
    g: DiGraph,
    algorithms: Sequence[str] = ALGORITHMS,
    repetitions: int = 3,
    variant: Algo4Variant = Algo4Variant.PROSE,
    timing: bool = True,
) -> list[tuple[BenchRow, RemovalResult]]:
    """One row per requested algorithm; dfs_once is skipped when it does not apply."""
    out = []
    for name in sorted(algorithms):
        if name == "dfs_once" and not dfs_once_applies(g):
            continue
        fn = _runner(name, variant)
        res = fn(g)
        times = [res.elapsed]
        if timing:
            times += [fn(g).elapsed for _ in range(max(repetitions, 1) - 1)]
        remaining = res.graph.m
        row = BenchRow(
            dataset=dataset,
            n=g.n,
            m=g.m,
            algorithm=res.algorithm,
            edges_removed=g.m - remaining,
            edges_remaining=remaining,
            time_ms=statistics.median(times) * 1000 if timing else None,
            verified=verified(g, res),
        )
        out.append((row, res))
    return out


def provenance_lines(variant: Algo4Variant, seed: int | None, repetitions: int, timing: bool) -> list[str]:
    return [
        machine_line(),
        f"order: {ORDER_POLICY}; algo4 variant: {variant.value}; seed: {seed if seed is not None else 'none'}",
        f"timing: {'median of %d' % max(repetitions, 1) if timing else 'off'}; cycle removal: DFS back edges",
    ]


def to_csv(rows: Iterable[BenchRow], comments: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sorted(rows, key=lambda r: (r.dataset, r.algorithm)):
        w.writerow(r.cells())
    return buf.getvalue()


def csv_body(text: str) -> str:
    """The CSV without its ``#`` comment lines."""
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("#"))


def to_markdown(csv_text: str) -> str:
    """Render a results CSV as a markdown table; reads the CSV, never the rows."""
    rows = list(csv.reader(io.StringIO(csv_body(csv_text))))
    head, body = rows[0], rows[1:]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    lines += ["| " + " | ".join(r) + " |" for r in body]
    return "\n".join(lines) + "\n"


def write_removals(
    directory: Path, dataset: str, g: DiGraph, res: RemovalResult, rep: IngestReport
) -> Path:
    """Persist the removed edges as an edge list in the dataset's own labels."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{dataset}.{res.algorithm}.removed.txt"
    header = [f"dataset={dataset} algorithm={res.algorithm} removed={res.size}"]
    if not res.certifies_input:
        header.append("removals apply to the graph of medial cross/forward edges, not to the dataset")
    with open(path, "w") as fh:
        write_edge_list(restrict(g, res.removed), fh, rep.labels, header)
    return path
