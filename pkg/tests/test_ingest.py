import gzip
import io

import pytest
from hypothesis import given

from singly.graph import build, is_acyclic
from singly.ingest import ParseError, dumps, load, parse_edge_list, remove_cycles

from _oracles import dags, digraphs


def parse(text):
    return parse_edge_list(io.StringIO(text))


def test_comments_and_tabs():
    g, rep = parse("# comment\n0\t1\n1\t2\n")
    assert g.n == 3 and set(g.pairs()) == {(0, 1), (1, 2)}
    assert rep.raw_lines == 3 and rep.parsed_edges == 2


def test_self_loop_dropped_and_labels_densified():
    g, rep = parse("5 5\n5 7\n")
    assert g.n == 2 and g.pairs() == [(0, 1)]
    assert rep.label_to_id == {5: 0, 7: 1}
    assert rep.self_loops == 1


def test_duplicates_dropped():
    g, rep = parse("0 1\n0 1\n")
    assert g.m == 1 and rep.duplicates == 1


def test_first_appearance_order():
    g, rep = parse("30 10\n20 30\n")
    assert rep.labels == [30, 10, 20]
    assert g.pairs() == [(0, 1), (2, 0)]


@pytest.mark.parametrize(
    "text, line",
    [("0 1\n0 x\n", 2), ("0 1 2\n", 1), ("# h\n\n7\n", 3), ("1.5 2\n", 1)],
)
def test_malformed_lines(text, line):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line_no == line
    assert f"line {line}" in str(info.value)


def test_remove_cycles_two_cycle():
    # DFS from 0 takes (0,1) as a tree edge, then (1,0) hits 0 on the stack
    g = build(2, [(0, 1), (1, 0)])
    h, removed = remove_cycles(g)
    assert removed == [1] and h.pairs() == [(0, 1)]


def test_remove_cycles_triangle():
    g = build(3, [(0, 1), (1, 2), (2, 0)])
    h, removed = remove_cycles(g)
    assert [g.edge(e)[1:] for e in removed] == [(2, 0)]


def test_remove_cycles_diamond_untouched():
    g = build(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    h, removed = remove_cycles(g)
    assert removed == [] and h == g


def test_remove_cycles_later_root():
    # vertex 0 is isolated; the cycle is first entered from root 1
    g = build(4, [(2, 3), (3, 1), (1, 2)])
    _, removed = remove_cycles(g)
    assert [g.edge(e)[1:] for e in removed] == [(3, 1)]


@given(digraphs())
def test_remove_cycles_always_acyclic(data):
    n, pairs = data
    g = build(n, pairs)
    h, removed = remove_cycles(g)
    assert is_acyclic(h)[0]
    assert h.m + len(removed) == g.m


@given(dags())
def test_remove_cycles_noop_on_dags(data):
    n, pairs = data
    g = build(n, pairs)
    assert remove_cycles(g)[1] == []


@given(digraphs())
def test_report_accounting(data):
    n, pairs = data
    text = "".join(f"{t} {h}\n" for t, h in pairs + pairs[:2]) + "3 3\n"
    g, rep = parse(text)
    h, rep.cycle_edges = remove_cycles(g)
    assert rep.parsed_edges == h.m + rep.duplicates + rep.self_loops + rep.cycle_removed
    assert sorted(rep.label_to_id.values()) == list(range(g.n))


@given(digraphs())
def test_parse_idempotent(data):
    n, pairs = data
    g, rep = parse("".join(f"{t + 100} {h + 100}\n" for t, h in pairs))
    text = dumps(g, rep.labels, header=rep.header())
    g2, rep2 = parse(text)
    assert g2.pairs() == g.pairs() and rep2.labels == rep.labels
    assert dumps(g2, rep2.labels, header=rep.header()) == text


def test_load_plain_and_gzip(tmp_path):
    text = "# cyclic\n7 8\n8 9\n9 7\n"
    plain = tmp_path / "g.txt"
    plain.write_text(text)
    packed = tmp_path / "g.txt.gz"
    with gzip.open(packed, "wt") as fh:
        fh.write(text)
    g1, rep1 = load(plain)
    g2, rep2 = load(packed)
    assert g1 == g2 and g1.m == 2 and is_acyclic(g1)[0]
    assert rep1.cycle_edges == rep2.cycle_edges and len(rep1.cycle_edges) == 1
