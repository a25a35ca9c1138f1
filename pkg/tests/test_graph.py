import pytest
from hypothesis import given

from mzi.graph import (
    Graph,
    Graph6Error,
    GraphError,
    connected_components,
    delete_vertex,
    edge_add,
    edge_delete,
    induced_subgraph,
    is_connected,
    is_tree,
    parse_graph6,
    read_graph6_lines,
    relabel,
    to_graph6,
)

from conftest import graphs, permutations_of


def test_known_graph6_strings():
    assert to_graph6(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) == "Bw"
    assert to_graph6(Graph.from_edges(3, [(0, 1), (1, 2)])) == "Bg"
    assert to_graph6(Graph.empty(1)) == "@"


def test_large_order_uses_long_header():
    g = Graph.from_edges(63, [(0, 62)])
    code = to_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g


@pytest.mark.parametrize("bad", ["", "@@", "Bx", "B\x7f", "Bww", "C~" + "~" * 3])
def test_parse_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_parse_tolerates_newline_only():
    assert parse_graph6("Bw\n") == parse_graph6("Bw")
    with pytest.raises(Graph6Error):
        parse_graph6(" Bw")


def test_read_lines_skips_blank():
    assert [to_graph6(g) for g in read_graph6_lines(["Bw", "", "Bg\n"])] == ["Bw", "Bg"]


@given(graphs(min_n=1, max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.num_edges()
    assert g.num_edges() + len(g.non_edges()) == g.n * (g.n - 1) // 2


def test_edge_ops_validate():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError):
        edge_add(g, 0, 1)
    with pytest.raises(GraphError):
        edge_delete(g, 1, 2)
    with pytest.raises(GraphError):
        edge_add(g, 0, 0)
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    assert edge_delete(edge_add(g, 1, 2), 1, 2) == g


def test_invalid_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))


@given(graphs(max_n=7).flatmap(lambda g: permutations_of(g.n).map(lambda p: (g, p))))
def test_relabel_preserves_structure(pair):
    g, perm = pair
    h = relabel(g, perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_components_and_trees():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    count, parts = connected_components(g)
    assert count == 3
    assert sorted(map(sorted, parts)) == [[0, 1], [2, 3], [4]]
    assert not is_connected(g)
    assert is_tree(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)]))
    assert not is_tree(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_subgraphs():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert induced_subgraph(g, [1, 2, 3]) == Graph.from_edges(3, [(0, 1), (1, 2)])
    assert delete_vertex(g, 0).edges() == [(0, 1), (1, 2)]
