"""Deciders for single connectivity of a DAG.

Two independent routes:

* :func:`check_by_dfs` roots a DFS at every source and fails on the first
  non-tree edge, reconstructing two distinct paths as evidence.
* :func:`check_by_counting` counts paths between every ordered pair with
  saturating arithmetic, using Python ints as bitsets (one bitset per count
  level per vertex).

Every path in a DAG is simple, so "at most one path between each pair" can be
decided by counting.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import DiGraph, require_acyclic, root_sets


class ViolationWitness(NamedTuple):
    u: int
    v: int
    path: list[int]
    other: list[int]


class DfsVerdict(NamedTuple):
    ok: bool
    witness: ViolationWitness | None = None


class CountVerdict(NamedTuple):
    ok: bool
    # (u, v, saturated path count) for the first pair found with count >= 2
    pair: tuple[int, int, int] | None = None


def _run_until_nontree(g: DiGraph, root: int) -> tuple[dict[int, int], int | None]:
    out, heads = g.out, g.heads
    parent = {root: -1}
    stack = [iter(out[root])]
    while stack:
        for e in stack[-1]:
            w = heads[e]
            if w in parent:
                return parent, e
            parent[w] = e
            stack.append(iter(out[w]))
            break
        else:
            stack.pop()
    return parent, None


def _witness(g: DiGraph, parent: dict[int, int], e: int) -> ViolationWitness:
    tails = g.tails
    tail, head = g.tails[e], g.heads[e]

    def up(v: int) -> list[int]:
        chain = [v]
        while parent[v] != -1:
            v = tails[parent[v]]
            chain.append(v)
        return chain

    head_chain = up(head)
    on_head_chain = set(head_chain)
    u = next(x for x in up(tail) if x in on_head_chain)

    def tree_path(frm: int, to: int) -> list[int]:
        path = []
        while to != frm:
            path.append(parent[to])
            to = tails[parent[to]]
        path.reverse()
        return path

    return ViolationWitness(u, head, tree_path(u, head), tree_path(u, tail) + [e])


def check_by_dfs(g: DiGraph) -> DfsVerdict:
    """True iff every source's DFS sees only tree edges."""
    require_acyclic(g)
    for s in root_sets(g).sources:
        parent, bad = _run_until_nontree(g, s)
        if bad is not None:
            return DfsVerdict(False, _witness(g, parent, bad))
    return DfsVerdict(True)


def check_by_counting(g: DiGraph, cap: int = 2) -> CountVerdict:
    """True iff no ordered pair is joined by ``cap``-saturated count >= 2."""
    if cap < 2:
        raise ValueError("cap must be at least 2")
    order = require_acyclic(g)
    return _count_core(g.n, g.out, g.heads, order, cap)


def _count_core(n, out, heads, order, cap: int = 2) -> CountVerdict:
    # bit index = position in reverse topological order, so a vertex's
    # descendants all sit below its own bit and bitsets stay short
    pos = [0] * n
    for i, v in enumerate(reversed(order)):
        pos[v] = i
    pending = [0] * n
    for v in range(n):
        for e in out[v]:
            pending[heads[e]] += 1
    levels: dict[int, list[int]] = {}
    for u in reversed(order):
        acc = [0] * cap  # acc[k-1]: targets reached by >= k paths
        for e in out[u]:
            w = heads[e]
            lw = levels[w]
            contrib = [lw[0] | (1 << pos[w])] + lw[1:]
            acc = _sat_add(acc, contrib, cap)
            pending[w] -= 1
            if pending[w] == 0:
                del levels[w]
        if acc[1]:
            low = acc[1] & -acc[1]
            v = order[n - low.bit_length()]
            count = max(k + 1 for k in range(cap) if acc[k] & low)
            return CountVerdict(False, (u, v, count))
        if pending[u]:
            levels[u] = acc
    return CountVerdict(True)


def _sat_add(a: list[int], c: list[int], cap: int) -> list[int]:
    if cap == 2:
        return [a[0] | c[0], a[1] | c[1] | (a[0] & c[0])]
    res = []
    for k in range(1, cap + 1):
        bits = a[k - 1] | c[k - 1]
        for i in range(1, k):
            bits |= a[i - 1] & c[k - i - 1]
        res.append(bits)
    return res


def path_counts_from(g: DiGraph, u: int, cap: int | None = 2) -> list[int]:
    """Number of u -> v paths for every v (the empty path excluded), clamped at ``cap``.

    Forward DP along a topological order; ``cap=None`` gives exact counts.
    """
    order = require_acyclic(g)
    counts = [0] * g.n
    counts[u] = 1
    for x in order:
        c = counts[x]
        if not c:
            continue
        for e in g.out[x]:
            w = g.heads[e]
            counts[w] += c
            if cap is not None and counts[w] > cap:
                counts[w] = cap
    counts[u] = 0
    return counts


def agree(g: DiGraph) -> bool:
    return check_by_dfs(g).ok == check_by_counting(g).ok


def is_singly_connected(g: DiGraph) -> bool:
    """Both deciders must accept."""
    return check_by_dfs(g).ok and check_by_counting(g).ok


def witness_is_valid(g: DiGraph, w: ViolationWitness) -> bool:
    """Both paths exist in ``g``, run u -> v, are simple and differ."""
    if w.path == w.other:
        return False
    for path in (w.path, w.other):
        if not path:
            return False
        cur = w.u
        seen = {cur}
        for e in path:
            if not g.has_edge_id(e) or g.tails[e] != cur:
                return False
            cur = g.heads[e]
            if cur in seen:
                return False
            seen.add(cur)
        if cur != w.v:
            return False
    return True


__all__ = [
    "CountVerdict",
    "DfsVerdict",
    "ViolationWitness",
    "agree",
    "check_by_counting",
    "check_by_dfs",
    "is_singly_connected",
    "path_counts_from",
    "witness_is_valid",
]
