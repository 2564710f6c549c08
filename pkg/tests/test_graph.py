import pytest
from hypothesis import given
from hypothesis import strategies as st

from singly.graph import (
    DuplicateEdge,
    EndpointOutOfRange,
    SelfLoop,
    UnknownEdge,
    build,
    is_acyclic,
    remove_edges,
    reverse,
    root_sets,
)

from _oracles import dags, digraphs

DIAMOND = [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_empty():
    g = build(2, [])
    assert (g.n, g.m) == (2, 0)


def test_diamond_adjacency():
    g = build(4, DIAMOND)
    assert g.m == 4
    assert g.successors(0) == [1, 2]
    assert list(g.out[0]) == [0, 1]
    assert g.indeg == (0, 1, 1, 2)
    assert g.outdeg == (2, 1, 1, 0)


def test_adjacency_sorted_by_head_not_input_order():
    g = build(4, [(0, 3), (0, 1), (0, 2)])
    assert g.successors(0) == [1, 2, 3]
    assert [g.edge(e).id for e in g.out[0]] == [1, 2, 0]


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 1), (0, 1)], DuplicateEdge),
        (3, [(0, 3)], EndpointOutOfRange),
        (3, [(-1, 0)], EndpointOutOfRange),
        (3, [(1, 1)], SelfLoop),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc, match=r"\("):
        build(n, edges)


def test_reverse_keeps_ids():
    g = reverse(build(2, [(0, 1)]))
    assert list(g.edges()) == [(0, 1, 0)]


def test_reverse_diamond():
    r = reverse(build(4, DIAMOND))
    assert set(r.pairs()) == {(1, 0), (2, 0), (3, 1), (3, 2)}
    assert reverse(r) == build(4, DIAMOND)


def test_root_sets():
    assert root_sets(build(4, DIAMOND)) == ([0], [3], [1, 2])
    assert root_sets(build(2, [(0, 1), (1, 0)])) == ([], [], [0, 1])
    assert root_sets(build(2, [])) == ([0, 1], [0, 1], [])


def test_remove_edges():
    g = build(4, DIAMOND)
    h = remove_edges(g, {3})
    assert h.m == 3 and h.indeg[3] == 1
    assert remove_edges(g, set()) == g
    empty = remove_edges(g, {0, 1, 2, 3})
    assert (empty.n, empty.m) == (4, 0)
    with pytest.raises(UnknownEdge):
        remove_edges(g, {7})
    with pytest.raises(UnknownEdge):
        remove_edges(h, {3})


def test_is_acyclic():
    assert is_acyclic(build(4, DIAMOND)) == (True, [0, 1, 2, 3])
    assert is_acyclic(build(2, [(0, 1), (1, 0)]))[0] is False
    assert is_acyclic(build(3, [])) == (True, [0, 1, 2])


def test_kahn_breaks_ties_by_smallest_id():
    assert is_acyclic(build(4, [(3, 0), (2, 1)]))[1] == [2, 1, 3, 0]


def _adjacency_sorted(g):
    return all(list(g.successors(v)) == sorted(g.successors(v)) for v in range(g.n))


@given(digraphs())
def test_reverse_involution_and_roles(data):
    n, pairs = data
    g = build(n, pairs)
    r = reverse(g)
    assert r.m == g.m and r.edge_ids == g.edge_ids
    assert reverse(r) == g and reverse(r).out == g.out
    assert root_sets(r).sources == root_sets(g).sinks
    assert root_sets(r).sinks == root_sets(g).sources
    assert sum(g.indeg) == sum(g.outdeg) == g.m
    assert _adjacency_sorted(g) and _adjacency_sorted(r)


@given(digraphs(), st.data())
def test_remove_edges_composes(data, draw):
    n, pairs = data
    g = build(n, pairs)
    h1 = set(draw.draw(st.sets(st.sampled_from(g.edge_ids)))) if g.m else set()
    h2 = set(draw.draw(st.sets(st.sampled_from(g.edge_ids)))) if g.m else set()
    both = remove_edges(g, h1 | h2)
    stepwise = remove_edges(remove_edges(g, h1), h2 - h1)
    assert both == stepwise
    assert _adjacency_sorted(both)
    assert set(both.edge_ids) == set(g.edge_ids) - h1 - h2


@given(dags())
def test_dag_roles(data):
    n, pairs = data
    g = build(n, pairs)
    ok, order = is_acyclic(g)
    assert ok
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[t] < pos[h] for t, h in pairs)
    if g.m:
        rs = root_sets(g)
        assert rs.sources and rs.sinks
