import math

import pytest
from hypothesis import given

from mzi.constructions import complete, path, star
from mzi.graph import Graph
from mzi.indices import (
    DegenerateIndexError,
    index_value,
    m1,
    m2,
    pi1_exact,
    pi1_log,
    pi2_edge_form,
    pi2_exact,
    pi2_log,
)

from conftest import graphs


def test_small_values():
    assert (pi1_exact(complete(3)), pi2_exact(complete(3))) == (64, 64)
    assert (pi1_exact(path(3)), pi2_exact(path(3))) == (4, 4)
    assert pi1_exact(star(5)) == 16
    assert pi2_exact(star(5)) == 4**4
    assert m1(path(3)) == 6 and m2(path(3)) == 4


def test_large_values_are_exact():
    # K_30: (29^2)^30 and 29^(29*30), far beyond float range
    k30 = complete(30)
    assert pi1_exact(k30) == 29**60
    assert pi2_exact(k30) == 29**870


def test_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    assert pi1_exact(g) == 0
    assert pi2_exact(g) == 1
    with pytest.raises(DegenerateIndexError):
        pi1_log(g)
    with pytest.raises(DegenerateIndexError):
        pi2_log(g)


def test_index_value_dispatch():
    assert index_value(path(4), "pi1") == 16
    with pytest.raises(ValueError):
        index_value(path(4), "pi3")


@given(graphs())
def test_vertex_and_edge_forms_agree(g):
    assert pi2_exact(g) == pi2_edge_form(g)


@given(graphs(min_n=2, connected=True))
def test_log_matches_exact(g):
    assert math.isclose(pi1_log(g), math.log(pi1_exact(g)), rel_tol=1e-9, abs_tol=1e-12)
    assert math.isclose(pi2_log(g), math.log(pi2_exact(g)), rel_tol=1e-9, abs_tol=1e-12)


@given(graphs())
def test_pi1_is_square_of_degree_product(g):
    assert pi1_exact(g) == math.prod(g.degrees()) ** 2
