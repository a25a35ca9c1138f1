from itertools import combinations

import pytest
from hypothesis import given, settings

from mzi.connectivity import (
    ClassConstraint,
    ConnectivityError,
    edge_connectivity,
    in_class,
    pendant_count,
    vertex_connectivity,
)
from mzi.constructions import complete, cycle, k_n_k, path, star
from mzi.enumeration import connected_graphs
from mzi.graph import Graph, delete_vertex, edge_delete, induced_subgraph, is_connected

from conftest import graphs


def brute_kappa(g):
    if g.num_edges() == g.n * (g.n - 1) // 2:
        return g.n - 1
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in cut]
            if not is_connected(induced_subgraph(g, rest)):
                return size
    return g.n - 1


def brute_kappa_edge(g):
    edges = g.edges()
    for size in range(len(edges) + 1):
        for cut in combinations(edges, size):
            h = g
            for u, v in cut:
                h = edge_delete(h, u, v)
            if not is_connected(h):
                return size
    raise AssertionError("unreachable")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_matches_brute_force_exhaustively(n):
    for g in connected_graphs(n):
        assert vertex_connectivity(g) == brute_kappa(g)
        assert edge_connectivity(g) == brute_kappa_edge(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7, connected=True))
def test_random_graphs_match_brute_force(g):
    assert vertex_connectivity(g) == brute_kappa(g)
    assert edge_connectivity(g) == brute_kappa_edge(g)


@given(graphs(min_n=2, max_n=9, connected=True))
def test_whitney_inequality(g):
    assert vertex_connectivity(g) <= edge_connectivity(g) <= min(g.degrees())


def test_named_graphs():
    assert vertex_connectivity(complete(6)) == 5
    assert edge_connectivity(cycle(6)) == 2
    assert vertex_connectivity(star(6)) == 1
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert vertex_connectivity(bowtie) == 1 and edge_connectivity(bowtie) == 2
    for n in range(3, 8):
        for k in range(1, n):
            g = k_n_k(n, k)
            assert vertex_connectivity(g) == edge_connectivity(g) == k


def test_disconnected_or_trivial_rejected():
    with pytest.raises(ConnectivityError):
        vertex_connectivity(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(ConnectivityError):
        edge_connectivity(Graph.empty(1))


def test_class_constraint_validation():
    with pytest.raises(ValueError):
        ClassConstraint.vertex(5, 0)
    with pytest.raises(ValueError):
        ClassConstraint.edge(5, 5)
    with pytest.raises(ValueError):
        ClassConstraint.pendant(4, 4)
    with pytest.raises(ValueError):
        ClassConstraint(5, "X", 2)
    assert ClassConstraint.pendant(6, 3).label == "P(n=6, p=3)"


def test_membership():
    assert in_class(path(5), ClassConstraint.pendant(5, 2))
    assert not in_class(path(5), ClassConstraint.pendant(5, 3))
    assert in_class(star(5), ClassConstraint.pendant(5, 4))
    assert in_class(cycle(5), ClassConstraint.vertex(5, 2))
    assert not in_class(cycle(5), ClassConstraint.vertex(5, 1))
    assert not in_class(Graph.from_edges(5, [(0, 1)]), ClassConstraint.edge(5, 4))
    assert pendant_count(delete_vertex(star(5), 0)) == 0
