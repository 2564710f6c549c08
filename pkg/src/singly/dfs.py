"""Rooted depth-first search with tree/forward/cross/back edge classification."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .graph import DiGraph


class EdgeClass(enum.Enum):
    TREE = "tree"
    FORWARD = "forward"
    CROSS = "cross"
    BACK = "back"


@dataclass
class DfsRun:
    """One DFS from ``root``.

    Only vertices reached from the root appear in ``discovery``/``finish``, and
    only edges whose tail was reached appear in ``classes``.
    """

    root: int
    discovery: dict[int, int] = field(default_factory=dict)
    finish: dict[int, int] = field(default_factory=dict)
    parent_edge: dict[int, int] = field(default_factory=dict)
    classes: dict[int, EdgeClass] = field(default_factory=dict)

    @property
    def visited(self) -> set[int]:
        return set(self.discovery)

    def edges_of(self, cls: EdgeClass) -> set[int]:
        return {e for e, c in self.classes.items() if c is cls}

    def tree_edges(self) -> set[int]:
        return self.edges_of(EdgeClass.TREE)

    def tree_path(self, v: int) -> list[int]:
        """Edge ids of the tree path root -> v."""
        path = []
        while v != self.root:
            e = self.parent_edge[v]
            path.append(e)
            v = self._tails[e]
        path.reverse()
        return path

    _tails: tuple[int, ...] = field(default=(), repr=False)


def classify_from_root(g: DiGraph, root: int) -> DfsRun:
    """Classify every edge reachable from ``root``.

    Neighbors are explored in ascending head order.  A non-tree edge into a
    finished vertex is FORWARD if the head was discovered after the tail,
    CROSS otherwise; an edge into a discovered but unfinished vertex is BACK.
    """
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} outside [0, {g.n})")
    out, heads = g.out, g.heads
    run = DfsRun(root=root, _tails=g.tails)
    disc, fin, parent, classes = run.discovery, run.finish, run.parent_edge, run.classes
    clock = 0
    disc[root] = clock
    clock += 1
    stack = [(root, iter(out[root]))]
    while stack:
        v, it = stack[-1]
        for e in it:
            w = heads[e]
            if w not in disc:
                classes[e] = EdgeClass.TREE
                parent[w] = e
                disc[w] = clock
                clock += 1
                stack.append((w, iter(out[w])))
                break
            if w not in fin:
                classes[e] = EdgeClass.BACK
            elif disc[w] > disc[v]:
                classes[e] = EdgeClass.FORWARD
            else:
                classes[e] = EdgeClass.CROSS
        else:
            fin[v] = clock
            clock += 1
            stack.pop()
    return run


def nontree_cf_edges(run: DfsRun) -> set[int]:
    return {e for e, c in run.classes.items() if c is EdgeClass.CROSS or c is EdgeClass.FORWARD}


def sweep(g: DiGraph, root: int) -> tuple[list[int], list[int]]:
    """Tree and cross/forward edge ids of one run from ``root``.

    Same traversal as :func:`classify_from_root` without stamps or records;
    the heuristics call this once per root, so it is kept lean.  On a DAG there
    are no back edges, so every non-tree edge is cross or forward.  On a cyclic
    graph back edges land in the second list too; callers check acyclicity.
    """
    out, heads = g.out, g.heads
    seen = {root}
    tree: list[int] = []
    other: list[int] = []
    stack = [iter(out[root])]
    while stack:
        for e in stack[-1]:
            w = heads[e]
            if w in seen:
                other.append(e)
            else:
                seen.add(w)
                tree.append(e)
                stack.append(iter(out[w]))
                break
        else:
            stack.pop()
    return tree, other


def _use_kernel() -> bool:
    return _kernels.multi_sweep is not None and not os.environ.get("SINGLY_PURE_PYTHON")


def multi_sweep(g: DiGraph, roots: list[int]) -> tuple[set[int], set[int]]:
    """Union over independent runs from ``roots`` of (cross/forward, tree) edge ids.

    An edge can land in both sets when it is a tree edge for one root and a
    non-tree edge for another.  Uses the compiled kernel when numba is
    available and ``SINGLY_PURE_PYTHON`` is unset.
    """
    if not roots:
        return set(), set()
    if _use_kernel():
        indptr, heads, eid = g.csr
        cf, tree = _kernels.multi_sweep(indptr, heads, np.asarray(roots, dtype=np.int64), g.n)
        return set(eid[cf.astype(bool)].tolist()), set(eid[tree.astype(bool)].tolist())
    cf_ids: set[int] = set()
    tree_ids: set[int] = set()
    for r in roots:
        tree, other = sweep(g, r)
        tree_ids.update(tree)
        cf_ids.update(other)
    return cf_ids, tree_ids
