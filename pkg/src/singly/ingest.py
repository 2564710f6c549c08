"""SNAP-style edge lists in, normalized DAGs out.

Format: ``#`` comment lines, then one ``tail head`` pair of integer labels per
line.  Self-loops and repeated pairs are dropped, labels are renumbered
densely in order of first appearance on a kept line, and cycles are broken
by deleting the back edges of one deterministic DFS forest.  Files ending in
``.gz`` are read through gzip, as SNAP distributes them.
"""

from __future__ import annotations

import gzip
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .graph import DiGraph, build, remove_edges


class ParseError(ValueError):
    def __init__(self, line_no: int, msg: str):
        super().__init__(f"line {line_no}: {msg}")
        self.line_no = line_no


class EmptyInput(ValueError):
    pass


@dataclass
class IngestReport:
    raw_lines: int = 0
    parsed_edges: int = 0
    duplicates: int = 0
    self_loops: int = 0
    labels: list[int] = field(default_factory=list)  # dense id -> external label
    cycle_edges: list[int] = field(default_factory=list)  # removed edge ids

    @property
    def label_to_id(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def cycle_removed(self) -> int:
        return len(self.cycle_edges)

    def header(self) -> list[str]:
        return [
            f"raw_lines={self.raw_lines}",
            f"parsed_edges={self.parsed_edges}",
            f"duplicates={self.duplicates}",
            f"self_loops={self.self_loops}",
            f"cycle_edges_removed={self.cycle_removed}",
        ]


def parse_edge_list(stream: TextIO | Iterable[str]) -> tuple[DiGraph, IngestReport]:
    rep = IngestReport()
    ids: dict[int, int] = {}
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    for line_no, line in enumerate(stream, 1):
        rep.raw_lines += 1
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected 2 fields, got {len(parts)}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer label in {s!r}") from None
        rep.parsed_edges += 1
        if a == b:
            # labels seen only on self-loops get no vertex
            rep.self_loops += 1
            continue
        t = ids.setdefault(a, len(ids))
        h = ids.setdefault(b, len(ids))
        if (t, h) in seen:
            rep.duplicates += 1
            continue
        seen.add((t, h))
        pairs.append((t, h))
    rep.labels = list(ids)
    return build(len(ids), pairs), rep


def back_edges(g: DiGraph) -> list[int]:
    """Back edges of the DFS forest started from every vertex in ascending order."""
    out, heads = g.out, g.heads
    state = bytearray(g.n)  # 0 new, 1 on stack, 2 done
    back: list[int] = []
    for r in range(g.n):
        if state[r]:
            continue
        state[r] = 1
        stack = [(r, iter(out[r]))]
        while stack:
            v, it = stack[-1]
            for e in it:
                w = heads[e]
                if not state[w]:
                    state[w] = 1
                    stack.append((w, iter(out[w])))
                    break
                if state[w] == 1:
                    back.append(e)
            else:
                state[v] = 2
                stack.pop()
    back.sort()
    return back


def remove_cycles(g: DiGraph) -> tuple[DiGraph, list[int]]:
    back = back_edges(g)
    return remove_edges(g, back), back


def open_edge_list(path: str | Path) -> TextIO:
    if str(path).endswith(".gz"):
        return gzip.open(path, "rt")
    return open(path)


def load(path: str | Path, *, acyclic: bool = True) -> tuple[DiGraph, IngestReport]:
    """Parse a file and, unless ``acyclic=False``, break its cycles."""
    with open_edge_list(path) as fh:
        g, rep = parse_edge_list(fh)
    if acyclic:
        g, rep.cycle_edges = remove_cycles(g)
    return g, rep


def write_edge_list(
    g: DiGraph,
    stream: TextIO,
    labels: list[int] | None = None,
    header: Iterable[str] = (),
) -> None:
    """Write ``g`` in the same format :func:`parse_edge_list` reads."""
    for line in header:
        stream.write(f"# {line}\n")
    lab = labels if labels is not None else range(g.n)
    for e in g.edges():
        stream.write(f"{lab[e.tail]}\t{lab[e.head]}\n")


def dumps(g: DiGraph, labels: list[int] | None = None, header: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf, labels, header)
    return buf.getvalue()
