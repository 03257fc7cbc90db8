from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorkit import (EdgeListError, Graph, emit_edge_list, gen_named,
                       gen_random, parse_edge_list, relabel)


def test_parse_two_edge_path():
    g = parse_edge_list("3\n0 1\n1 2\n")
    assert g.n == 3
    assert set(g.edges) == {(0, 1), (1, 2)}


def test_parse_isolated_vertex():
    g = parse_edge_list("1\n")
    assert g.n == 1
    assert g.edges == ()


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# header comment\n\n3\n# edge below\n0 2\n\n")
    assert g.n == 3
    assert g.edges == ((0, 2),)


@pytest.mark.parametrize("text, fragment", [
    ("2\n0 0\n", "self-loop"),
    ("2\n0 1\n1 0\n", "duplicate"),
    ("2\n0 5\n", "out of range"),
    ("2\n0 1 2\n", "expected"),
    ("2\na b\n", "integers"),
    ("", "missing vertex count"),
    ("x\n", "vertex count"),
])
def test_parse_rejects_bad_input(text, fragment):
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list(text)
    assert fragment in str(exc.value)


def test_parse_error_reports_line_number():
    with pytest.raises(EdgeListError, match="line 3"):
        parse_edge_list("3\n0 1\n1 1\n")


def test_emit_sorts_edges():
    g = Graph(3, [(1, 2), (0, 1)])
    assert emit_edge_list(g) == "3\n0 1\n1 2\n"


def test_emit_empty_graph():
    assert emit_edge_list(Graph(0, [])) == "0\n"


def test_construction_rejects_self_loop_and_duplicates():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph(2, [(0, 3)])


def test_adjacency_sorted_and_ids_shared():
    g = Graph(4, [(2, 0), (0, 1), (3, 0)])
    assert [u for u, _ in g.adj[0]] == [1, 2, 3]
    eid = g.edge_id(0, 2)
    assert (0, eid) in g.adj[2]
    assert g.endpoints(eid) == (0, 2)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs = draw(st.lists(st.sampled_from(all_pairs), unique=True)) if all_pairs else []
    return Graph(n, pairs)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_parse_emit_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count


def test_gen_cycle():
    c5 = gen_named("cycle", 5)
    assert c5.n == 5 and c5.edge_count == 5
    assert all(c5.degree(v) == 2 for v in range(5))


def test_gen_petersen_is_cubic():
    g = gen_named("petersen")
    assert g.n == 10 and g.edge_count == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_gen_fig1_named_edges():
    g = gen_named("fig1")
    assert g.n == 16 and g.edge_count == 21
    # 1-based labels in the figure: edge (11,15) and edge (16,2)
    assert g.edge_id(10, 14) is not None
    assert g.edge_id(15, 1) is not None


def test_gen_star_and_bipartite():
    star = gen_named("star", 3)
    assert star.n == 4 and star.degree(0) == 3
    k23 = gen_named("complete_bipartite", 2, 3)
    assert k23.n == 5 and k23.edge_count == 6


@pytest.mark.parametrize("family, params", [
    ("cycle", (2,)),
    ("nosuch", (3,)),
    ("petersen", (1,)),
    ("path", (0,)),
])
def test_gen_named_rejects_bad_params(family, params):
    with pytest.raises(ValueError):
        gen_named(family, *params)


def test_gen_random_extremes():
    assert gen_random(5, 0.0, 3).edge_count == 0
    assert gen_random(5, 1.0, 3).edge_count == 10


def test_gen_random_is_deterministic():
    a = gen_random(8, 0.5, 42)
    b = gen_random(8, 0.5, 42)
    assert a.edges == b.edges
    assert emit_edge_list(a) == emit_edge_list(b)


def test_gen_random_rejects_bad_p():
    with pytest.raises(ValueError):
        gen_random(4, 1.5, 0)


def test_relabel_identity_and_inverse():
    g = gen_random(7, 0.5, 9)
    ident = list(range(7))
    assert relabel(g, ident) == g
    perm = [3, 0, 6, 1, 5, 2, 4]
    inv = [perm.index(i) for i in range(7)]
    assert relabel(relabel(g, perm), inv) == g


def test_relabel_rejects_non_permutation():
    g = gen_named("path", 3)
    with pytest.raises(ValueError, match="permutation"):
        relabel(g, [0, 0, 2])
