"""Immutable directed graphs with stable edge ids.

Edge ids are assigned once, at :func:`build` time, and survive :func:`reverse`
and :func:`remove_edges`.  Out-adjacency lists are always sorted ascending by
head vertex so every traversal in the package is deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given edges."""


class EndpointOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class Edge(NamedTuple):
    id: int
    tail: int
    head: int


@dataclass(frozen=True, eq=False)
class DiGraph:
    """A directed graph over vertices ``0..n-1``.

    ``tails`` and ``heads`` are indexed by edge id over the id space of the
    graph this one was derived from; ``edge_ids`` lists the ids actually
    present.  Use :func:`build`, not the constructor.
    """

    n: int
    tails: tuple[int, ...]
    heads: tuple[int, ...]
    edge_ids: tuple[int, ...]
    out: tuple[tuple[int, ...], ...]
    indeg: tuple[int, ...]
    outdeg: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edge_ids)

    def edges(self) -> Iterator[Edge]:
        tails, heads = self.tails, self.heads
        for e in self.edge_ids:
            yield Edge(e, tails[e], heads[e])

    def edge(self, e: int) -> Edge:
        if not self.has_edge_id(e):
            raise UnknownEdge(f"unknown edge id {e}")
        return Edge(e, self.tails[e], self.heads[e])

    @cached_property
    def id_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def has_edge_id(self, e: int) -> bool:
        return e in self.id_set

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(indptr, head per slot, edge id per slot) in out-adjacency order."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.outdeg, out=indptr[1:])
        eid = np.fromiter((e for adj in self.out for e in adj), dtype=np.int64, count=self.m)
        heads = np.asarray(self.heads, dtype=np.int64)[eid] if self.m else np.zeros(0, dtype=np.int64)
        return indptr, heads, eid

    def pairs(self) -> list[tuple[int, int]]:
        """(tail, head) pairs in edge-id order."""
        return [(self.tails[e], self.heads[e]) for e in self.edge_ids]

    def successors(self, v: int) -> list[int]:
        heads = self.heads
        return [heads[e] for e in self.out[v]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and set(self.edges()) == set(other.edges())

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, m={self.m})"


class RootSets(NamedTuple):
    sources: list[int]
    sinks: list[int]
    medials: list[int]


def _assemble(n: int, tails: Sequence[int], heads: Sequence[int], ids: Iterable[int]) -> DiGraph:
    buckets: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for e in ids:
        buckets[tails[e]].append(e)
        indeg[heads[e]] += 1
    # ids within a bucket are ascending here; sorting by head keeps that as a
    # tiebreak, although heads are unique per tail anyway
    out = tuple(tuple(sorted(b, key=heads.__getitem__)) for b in buckets)
    edge_ids = tuple(sorted(e for b in out for e in b))
    return DiGraph(
        n=n,
        tails=tuple(tails),
        heads=tuple(heads),
        edge_ids=edge_ids,
        out=out,
        indeg=tuple(indeg),
        outdeg=tuple(len(b) for b in out),
    )


def build(n: int, edges: Iterable[tuple[int, int]]) -> DiGraph:
    """Build a graph; edge ids follow input order."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    tails: list[int] = []
    heads: list[int] = []
    seen: set[tuple[int, int]] = set()
    for t, h in edges:
        if not (0 <= t < n and 0 <= h < n):
            raise EndpointOutOfRange(f"edge ({t}, {h}) has an endpoint outside [0, {n})")
        if t == h:
            raise SelfLoop(f"self-loop ({t}, {h})")
        if (t, h) in seen:
            raise DuplicateEdge(f"duplicate edge ({t}, {h})")
        seen.add((t, h))
        tails.append(t)
        heads.append(h)
    return _assemble(n, tails, heads, range(len(tails)))


def reverse(g: DiGraph) -> DiGraph:
    """Flip every edge; ids are kept."""
    return _assemble(g.n, g.heads, g.tails, g.edge_ids)


def remove_edges(g: DiGraph, removed: Iterable[int]) -> DiGraph:
    """The subgraph (V, E minus removed).  Surviving edges keep their ids."""
    drop = set(removed)
    unknown = drop - g.id_set
    if unknown:
        raise UnknownEdge(f"unknown edge id {min(unknown)}")
    if not drop:
        return g
    return _assemble(g.n, g.tails, g.heads, (e for e in g.edge_ids if e not in drop))


def restrict(g: DiGraph, kept: Iterable[int]) -> DiGraph:
    """The subgraph (V, kept)."""
    keep = set(kept)
    unknown = keep - g.id_set
    if unknown:
        raise UnknownEdge(f"unknown edge id {min(unknown)}")
    return _assemble(g.n, g.tails, g.heads, sorted(keep))


def root_sets(g: DiGraph) -> RootSets:
    sources, sinks, medials = [], [], []
    for v, (i, o) in enumerate(zip(g.indeg, g.outdeg)):
        if i == 0:
            sources.append(v)
        if o == 0:
            sinks.append(v)
        if i and o:
            medials.append(v)
    return RootSets(sources, sinks, medials)


def topological_order(g: DiGraph) -> list[int] | None:
    """Kahn's algorithm, smallest ready vertex first.  None if ``g`` has a cycle."""
    indeg = list(g.indeg)
    heads = g.heads
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for e in g.out[v]:
            w = heads[e]
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    return order if len(order) == g.n else None


def is_acyclic(g: DiGraph) -> tuple[bool, list[int] | None]:
    order = topological_order(g)
    return order is not None, order


class NotAcyclic(ValueError):
    """An operation that requires a DAG was given a graph with a cycle."""


def require_acyclic(g: DiGraph) -> list[int]:
    order = topological_order(g)
    if order is None:
        raise NotAcyclic("input is not acyclic")
    return order
