"""Multiplicative and additive Zagreb indices.

All exact values are Python ints. The second multiplicative index is
evaluated in vertex form, prod d(u)**d(u); an isolated vertex contributes
``0**0 == 1`` there and a factor 0 to the first index.
"""

from __future__ import annotations

import math

from .graph import Graph


class DegenerateIndexError(ValueError):
    """The log of an index is requested for a graph with an isolated vertex."""


def pi1_exact(g: Graph) -> int:
    return math.prod(d * d for d in g.degrees())


def pi2_exact(g: Graph) -> int:
    return math.prod(d**d for d in g.degrees())


def pi2_edge_form(g: Graph) -> int:
    """Product of d(u)d(v) over edges; used only to cross-check pi2_exact."""
    deg = g.degrees()
    return math.prod(deg[u] * deg[v] for u, v in g.edges())


def m1(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def m2(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


def _nonzero_degrees(g: Graph) -> list[int]:
    deg = g.degrees()
    if 0 in deg:
        raise DegenerateIndexError("graph has an isolated vertex; log of index is -inf")
    return deg


def pi1_log(g: Graph) -> float:
    return math.fsum(2.0 * math.log(d) for d in _nonzero_degrees(g))


def pi2_log(g: Graph) -> float:
    return math.fsum(d * math.log(d) for d in _nonzero_degrees(g))


INDEX_FUNCS = {"pi1": pi1_exact, "pi2": pi2_exact}


def index_value(g: Graph, index: str) -> int:
    try:
        return INDEX_FUNCS[index](g)
    except KeyError:
        raise ValueError(f"unknown index {index!r}; expected one of {sorted(INDEX_FUNCS)}") from None
