"""Edge-removal procedures that leave a singly connected subgraph of a DAG.

All of them share one step: run an independent DFS from each root in a root
list (ascending) and collect the edges it classifies as cross or forward.
They differ in which roots are used and on which graph the step runs.

Roots and neighbors are always visited in ascending id order; the choice of
order changes which edges get removed.
"""

from __future__ import annotations

import enum
import functools
import time
from dataclasses import dataclass, field
from typing import Callable

from .dfs import multi_sweep, sweep
from .graph import (
    DiGraph,
    is_acyclic,
    remove_edges,
    require_acyclic,
    restrict,
    reverse,
    root_sets,
)


class Algo4Variant(enum.Enum):
    PROSE = "prose"
    LITERAL = "literal"


class PreconditionError(ValueError):
    pass


class SourceCountMismatch(PreconditionError):
    pass


class EdgeCountMismatch(PreconditionError):
    pass


@dataclass
class RemovalResult:
    algorithm: str
    removed: list[int]
    graph: DiGraph
    roots: list[int]
    dfs_runs: int
    elapsed: float = 0.0
    # False when ``graph`` is not (V, E - removed) of the input, see algo4 LITERAL
    certifies_input: bool = True
    phases: dict[str, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.removed)


def _cf_union(g: DiGraph, roots: list[int]) -> tuple[set[int], int]:
    found, _ = multi_sweep(g, roots)
    return found, len(roots)


def _timed(fn: Callable[..., RemovalResult]) -> Callable[..., RemovalResult]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> RemovalResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res

    return wrapper


@_timed
def dfs_once(g: DiGraph) -> RemovalResult:
    """Optimal removal for a DAG with one source and as many edges as vertices.

    The DFS from the source reaches everything, so it yields n-1 tree edges
    and exactly one cross or forward edge; dropping that edge is optimal.
    """
    require_acyclic(g)
    sources = root_sets(g).sources
    if len(sources) != 1:
        raise SourceCountMismatch(f"expected exactly one source, found {len(sources)}")
    if g.m != g.n:
        raise EdgeCountMismatch(f"expected m == n, got m={g.m}, n={g.n}")
    (h,) = sources
    _, other = sweep(g, h)
    assert len(other) == 1, other
    return RemovalResult("dfs_once", sorted(other), remove_edges(g, other), [h], 1)


def _from_sources(g: DiGraph) -> tuple[set[int], list[int], int]:
    roots = root_sets(g).sources
    removed, runs = _cf_union(g, roots)
    return removed, roots, runs


@_timed
def algo1_from_sources(g: DiGraph) -> RemovalResult:
    """DFS from every source; drop every cross/forward edge any run saw."""
    require_acyclic(g)
    removed, roots, runs = _from_sources(g)
    return RemovalResult("algo1", sorted(removed), remove_edges(g, removed), roots, runs)


@_timed
def algo2_sources_or_sinks(g: DiGraph) -> RemovalResult:
    """Algorithm 1 from the larger of the source and sink sets.

    With strictly more sinks than sources the graph is reversed, the sinks
    become roots, and the removals are mapped back (ids are shared, so the
    result is simply expressed in the original orientation).  Ties use sources.
    """
    require_acyclic(g)
    rs = root_sets(g)
    if len(rs.sinks) > len(rs.sources):
        removed, runs = _cf_union(reverse(g), rs.sinks)
        roots, flipped = rs.sinks, 1
    else:
        removed, runs = _cf_union(g, rs.sources)
        roots, flipped = rs.sources, 0
    res = RemovalResult("algo2", sorted(removed), remove_edges(g, removed), roots, runs)
    res.phases["reversed"] = flipped
    return res


@_timed
def algo3_tree_edges(g: DiGraph) -> RemovalResult:
    """Keep only the union of the per-source DFS trees, then run Algorithm 1 on that."""
    require_acyclic(g)
    sources = root_sets(g).sources
    _, kept = multi_sweep(g, sources)
    forest = restrict(g, kept)
    removed2, roots2, runs2 = _from_sources(forest)
    removed = (g.id_set - kept) | removed2
    res = RemovalResult(
        "algo3",
        sorted(removed),
        remove_edges(forest, removed2),
        sources,
        len(sources) + runs2,
    )
    res.phases.update(non_tree=g.m - len(kept), phase2=len(removed2), phase2_roots=len(roots2))
    return res


@_timed
def algo4_from_medials(g: DiGraph, variant: Algo4Variant | str = Algo4Variant.PROSE) -> RemovalResult:
    """DFS from every medial vertex, then Algorithm 1.

    PROSE removes the medial runs' cross/forward edges from ``g`` and runs
    Algorithm 1 on what is left.  LITERAL builds a graph out of those edges
    alone and runs Algorithm 1 on it; its output is singly connected but is
    not a subgraph obtained from ``g`` by the reported removals, so
    ``certifies_input`` is False.
    """
    variant = Algo4Variant(variant)
    require_acyclic(g)
    medials = root_sets(g).medials
    found, runs1 = _cf_union(g, medials)
    if variant is Algo4Variant.PROSE:
        work = remove_edges(g, found)
        removed2, _, runs2 = _from_sources(work)
        res = RemovalResult(
            "algo4",
            sorted(found | removed2),
            remove_edges(work, removed2),
            medials,
            runs1 + runs2,
        )
    else:
        temp = restrict(g, found)
        removed2, _, runs2 = _from_sources(temp)
        res = RemovalResult(
            "algo4_literal",
            sorted(removed2),
            remove_edges(temp, removed2),
            medials,
            runs1 + runs2,
            certifies_input=False,
        )
    res.phases.update(medial_cf=len(found), phase2=len(removed2))
    return res


HEURISTICS: dict[str, Callable[[DiGraph], RemovalResult]] = {
    "algo1": algo1_from_sources,
    "algo2": algo2_sources_or_sinks,
    "algo3": algo3_tree_edges,
    "algo4": algo4_from_medials,
}


def dfs_once_applies(g: DiGraph) -> bool:
    return g.m == g.n and len(root_sets(g).sources) == 1 and is_acyclic(g)[0]


def run_all(g: DiGraph, algo4_variant: Algo4Variant | str = Algo4Variant.PROSE) -> list[RemovalResult | Exception]:
    """Every heuristic on ``g``, plus dfs_once when its preconditions hold.

    A failing algorithm contributes its exception instead of a result; the
    rest still run.  The graph is immutable, so no copies are needed.
    """
    out: list[RemovalResult | Exception] = []
    for name, fn in HEURISTICS.items():
        try:
            if name == "algo4":
                out.append(algo4_from_medials(g, algo4_variant))
            else:
                out.append(fn(g))
        except Exception as exc:  # noqa: BLE001 - batch keeps going
            out.append(exc)
    if dfs_once_applies(g):
        try:
            out.append(dfs_once(g))
        except Exception as exc:  # noqa: BLE001
            out.append(exc)
    return out
