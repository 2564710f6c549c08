import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singly.graph import build, is_acyclic, root_sets
from singly.oracle import (
    Exhausted,
    Family,
    GenSpec,
    InfeasibleSpec,
    Optimum,
    SplitMix64,
    _pair,
    brute_force_min_removal,
    generate,
    snap_like_pairs,
)

from _oracles import dags, first_min_removal, min_removal, singly_connected

DIAMOND = [(0, 1), (0, 2), (1, 3), (2, 3)]
seeds = st.integers(0, 2**64 - 1)


def test_splitmix_reference_vector():
    r = SplitMix64(1234567)
    assert [r.next() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


@given(seeds, st.integers(1, 50))
def test_below_in_range(seed, k):
    r = SplitMix64(seed)
    assert all(0 <= r.below(k) < k for _ in range(20))


@given(seeds, st.integers(0, 40), st.data())
def test_sample_indices_distinct(seed, pop, data):
    k = data.draw(st.integers(0, pop))
    got = SplitMix64(seed).sample_indices(pop, k)
    assert len(set(got)) == k and all(0 <= x < pop for x in got)


def test_pair_enumeration():
    n = 9
    expect = [(a, b) for b in range(1, n) for a in range(b)]
    assert [_pair(t) for t in range(len(expect))] == expect


def test_golden_graphs():
    assert generate(GenSpec(8, 10, 42)).pairs() == [
        (0, 5), (0, 7), (1, 0), (1, 6), (2, 5), (2, 7), (3, 0), (3, 4), (3, 5), (6, 4)
    ]
    assert generate(GenSpec(7, 7, 42, Family.THEOREM1)).pairs() == [
        (0, 5), (1, 6), (3, 6), (4, 1), (5, 3), (5, 4), (6, 2)
    ]
    assert generate(GenSpec(9, 12, 42, Family.LAYERED, layers=3, top=2)).pairs() == [
        (2, 0), (4, 2), (4, 5), (4, 8), (5, 0), (5, 1), (6, 0), (6, 3), (7, 2), (7, 6), (8, 1), (8, 3)
    ]


@given(seeds)
def test_edgeless(seed):
    g = generate(GenSpec(4, 0, seed))
    assert (g.n, g.m) == (4, 0)


@given(seeds)
def test_theorem1_small(seed):
    g = generate(GenSpec(3, 3, seed, Family.THEOREM1))
    assert (g.n, g.m) == (3, 3) and len(root_sets(g).sources) == 1


@given(seeds)
def test_complete_dag(seed):
    g = generate(GenSpec(6, 15, seed))
    assert g.m == 15 and is_acyclic(g)[0]


@settings(max_examples=300)
@given(st.integers(0, 30), seeds, st.data())
def test_general_dag_shape(n, seed, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    spec = GenSpec(n, m, seed)
    g = generate(spec)
    assert (g.n, g.m) == (n, m) and is_acyclic(g)[0]
    assert generate(spec).pairs() == g.pairs()


@settings(max_examples=300)
@given(st.integers(3, 60), seeds)
def test_theorem1_shape(n, seed):
    g = generate(GenSpec(n, n, seed, Family.THEOREM1))
    assert g.m == n and is_acyclic(g)[0]
    assert root_sets(g).sources == [0]


@settings(max_examples=200)
@given(st.integers(2, 8), st.integers(1, 5), seeds, st.data())
def test_layered_sources_are_first_layer(k, top, seed, data):
    n = top + (k - 1) * data.draw(st.integers(1, 4))
    spec = GenSpec(n, 0, seed, Family.LAYERED, layers=k, top=top)
    sizes = [top] + [(n - top) // (k - 1)] * (k - 1)
    hi = sum(a * b for a, b in zip(sizes, sizes[1:]))
    m = data.draw(st.integers(n - top, hi))
    g = generate(GenSpec(n, m, seed, Family.LAYERED, layers=k, top=top))
    assert g.m == m and is_acyclic(g)[0]
    assert len(root_sets(g).sources) == top
    assert spec.describe().startswith("family=layered")


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec(3, 9),
        GenSpec(2, 2, family=Family.THEOREM1),
        GenSpec(5, 4, family=Family.THEOREM1),
        GenSpec(10, 3, family=Family.LAYERED, layers=3, top=2),
        GenSpec(4, 3, family=Family.LAYERED, layers=5),
        GenSpec(-1, 0),
    ],
)
def test_infeasible(spec):
    with pytest.raises(InfeasibleSpec):
        generate(spec)


def test_brute_force_diamond():
    # removing (0,1) already leaves a single 0 -> 3 route, and id 0 is smallest
    assert brute_force_min_removal(build(4, DIAMOND)) == Optimum(1, (0,))


def test_brute_force_tree():
    assert brute_force_min_removal(build(4, [(0, 1), (0, 2), (2, 3)])) == Optimum(0, ())


def test_brute_force_two_diamonds():
    two = DIAMOND + [(a + 4, b + 4) for a, b in DIAMOND]
    res = brute_force_min_removal(build(8, two))
    assert res.size == 2 and min_removal(8, two) == 2


def test_brute_force_budget():
    two = DIAMOND + [(a + 4, b + 4) for a, b in DIAMOND]
    assert brute_force_min_removal(build(8, two), budget=1) == Exhausted(1)


@settings(max_examples=150)
@given(dags(max_n=6, max_m=9))
def test_brute_force_matches_enumeration(data):
    n, pairs = data
    g = build(n, pairs)
    res = brute_force_min_removal(g)
    # edge ids follow input order, so index subsets and id subsets coincide
    assert res.removed == first_min_removal(n, pairs)
    kept = [p for i, p in enumerate(pairs) if i not in res.removed]
    assert singly_connected(n, kept)
    assert list(res.removed) == sorted(res.removed)


def test_snap_like_pairs_shape():
    pairs = snap_like_pairs(300, 2000, seed=3)
    assert pairs == snap_like_pairs(300, 2000, seed=3)
    assert len(pairs) == 2000 and all(0 <= a < 300 and 0 <= b < 300 for a, b in pairs)
    # a third of the vertices never receive an edge
    assert len(set(range(300)) - {b for _, b in pairs}) >= 100
