from itertools import combinations
from math import factorial

import pytest

from mzi import enumeration
from mzi.canon import canonical_form
from mzi.connectivity import ClassConstraint
from mzi.constructions import k_n_k, star
from mzi.enumeration import (
    EmptyClassError,
    EnumerationError,
    connected_graphs,
    enumerate_class,
    extremal_search,
    trees,
)
from mzi.graph import Graph, is_connected, is_tree, parse_graph6, to_graph6

from conftest import automorphism_count

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}


def labelled_connected_count(n):
    pairs = list(combinations(range(n), 2))
    return sum(
        is_connected(Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1]))
        for mask in range(1 << len(pairs))
    )


@pytest.mark.parametrize("n,count", sorted(CONNECTED_COUNTS.items()))
def test_connected_counts(n, count):
    level = connected_graphs(n)
    assert len(level) == count
    assert len({canonical_form(g) for g in level}) == count
    assert all(is_connected(g) for g in level)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_orbit_counting_matches_labelled_brute_force(n):
    # each class contributes n!/|Aut| labelled graphs; a missing or doubled
    # class would break the total
    total = sum(factorial(n) // automorphism_count(g) for g in connected_graphs(n))
    assert total == labelled_connected_count(n)


@pytest.mark.parametrize("n,count", sorted(TREE_COUNTS.items()))
def test_tree_counts(n, count):
    level = trees(n)
    assert len(level) == count
    assert all(is_tree(t) for t in level)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_trees_against_cayley(n):
    assert sum(factorial(n) // automorphism_count(t) for t in trees(n)) == n ** (n - 2)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_trees_agree_with_connected_enumeration(n):
    from_connected = sorted(canonical_form(g) for g in connected_graphs(n) if g.num_edges() == n - 1)
    assert from_connected == sorted(canonical_form(t) for t in trees(n))


def test_output_is_sorted_and_round_trips():
    for n in range(1, 8):
        codes = [canonical_form(g) for g in connected_graphs(n)]
        assert codes == sorted(codes)
        for g in connected_graphs(n):
            assert parse_graph6(to_graph6(g)) == g


def test_parallel_generation_is_identical(monkeypatch):
    sequential = [to_graph6(g) for g in connected_graphs(6)]
    monkeypatch.setattr(enumeration, "_LEVELS", {1: (Graph.empty(1),)})
    parallel = [to_graph6(g) for g in enumeration.enumerate_connected(6, jobs=2)]
    assert parallel == sequential


def test_order_limits():
    with pytest.raises(EnumerationError):
        connected_graphs(0)
    with pytest.raises(EnumerationError):
        connected_graphs(enumeration.MAX_CONNECTED_ORDER + 1)
    with pytest.raises(EnumerationError):
        trees(enumeration.MAX_TREE_ORDER + 1)


def test_class_sizes_partition_by_connectivity():
    n = 6
    sizes = [sum(1 for _ in enumerate_class(ClassConstraint.vertex(n, k))) for k in range(1, n)]
    assert sizes == sorted(sizes)
    assert sizes[-1] == CONNECTED_COUNTS[n]


def test_extremal_search_instance():
    rep = extremal_search(ClassConstraint.vertex(5, 2), "pi1", "max")
    assert rep.value == 82944
    assert rep.witnesses == [canonical_form(k_n_k(5, 2))]
    assert rep.class_size == 18
    low = extremal_search(ClassConstraint.edge(5, 1), "pi1", "min")
    assert low.value == 16 and low.witnesses == [canonical_form(star(5))]
    assert rep.to_dict()["value"] == "82944"


def test_extremal_search_rejects_bad_direction():
    with pytest.raises(ValueError):
        extremal_search(ClassConstraint.vertex(4, 1), "pi1", "sideways")


def test_every_valid_pendant_class_is_inhabited():
    # spiders exist for every 2 <= p <= n-1, so EmptyClassError never fires on a valid constraint
    for n in range(3, 8):
        for p in range(2, n):
            assert next(enumerate_class(ClassConstraint.pendant(n, p)), None) is not None
    assert issubclass(EmptyClassError, EnumerationError)
