"""Isomorph-free generation of connected graphs and trees, class filtering and extremal search.

Connected graphs are grown one vertex at a time by canonical augmentation:
a parent gets one child per Aut(parent)-orbit of non-empty neighbourhoods,
and a child is kept only if the new vertex lies in the orbit of the
child's canonical deletion vertex (a non-cut vertex chosen by invariants,
ties broken by canonical label). Each level is emitted in canonical-code order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .canon import CanonicalCode, _orbit_reps, canonical_form, canonical_graph, canonical_labeling
from .connectivity import ClassConstraint, in_class
from .graph import Graph, iter_bits, reachable
from .indices import index_value

MAX_CONNECTED_ORDER = 9
MAX_TREE_ORDER = 12


class EnumerationError(ValueError):
    pass


class EmptyClassError(EnumerationError):
    pass


# connected graphs -------------------------------------------------------------

def _non_cut_mask(g: Graph) -> int:
    full = (1 << g.n) - 1
    mask = 0
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if reachable(g, start, rest) == rest:
            mask |= 1 << v
    return mask


def _invariant(g: Graph, v: int, deg: list[int]) -> tuple:
    return (deg[v], tuple(sorted(deg[u] for u in iter_bits(g.adj[v]))))


def _accept(child: Graph) -> bool:
    """True iff the last vertex is in the orbit of the canonical deletion vertex."""
    w = child.n - 1
    deg = child.degrees()
    cands = list(iter_bits(_non_cut_mask(child)))
    invs = {v: _invariant(child, v, deg) for v in cands}
    best = min(invs.values())
    if invs[w] != best:
        return False
    tied = [v for v in cands if invs[v] == best]
    if len(tied) == 1:
        return True
    order, gens = canonical_labeling(child)
    pos = {v: i for i, v in enumerate(order)}
    chosen = max(tied, key=lambda v: pos[v])
    reps = _orbit_reps(child.n, list(gens), [])
    return reps[chosen] == reps[w]


def _subset_orbit_min(mask: int, gens: tuple[tuple[int, ...], ...]) -> bool:
    """True iff ``mask`` is the numerically least subset in its Aut-orbit."""
    if not gens:
        return True
    seen = {mask}
    stack = [mask]
    while stack:
        m = stack.pop()
        for gen in gens:
            img = 0
            for v in iter_bits(m):
                img |= 1 << gen[v]
            if img < mask:
                return False
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return True


def _children(parent: Graph) -> list[Graph]:
    n = parent.n
    _, gens = canonical_labeling(parent)
    out = []
    for mask in range(1, 1 << n):
        if not _subset_orbit_min(mask, gens):
            continue
        rows = list(parent.adj) + [mask]
        for v in iter_bits(mask):
            rows[v] |= 1 << n
        child = Graph(n + 1, tuple(rows))
        if _accept(child):
            out.append(canonical_graph(child))
    return out


def _sorted_level(graphs: list[Graph]) -> tuple[Graph, ...]:
    return tuple(sorted(graphs, key=canonical_form))


_LEVELS: dict[int, tuple[Graph, ...]] = {1: (Graph.empty(1),)}


def _connected_level(n: int, jobs: int = 1) -> tuple[Graph, ...]:
    if n not in _LEVELS:
        parents = _connected_level(n - 1, jobs)
        if jobs > 1 and len(parents) >= 2 * jobs:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(_children, parents, chunksize=max(1, len(parents) // (4 * jobs))))
        else:
            batches = [_children(p) for p in parents]
        _LEVELS[n] = _sorted_level([g for batch in batches for g in batch])
    return _LEVELS[n]


def enumerate_connected(n: int, jobs: int = 1) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices once up to isomorphism, in canonical-code order.

    With ``jobs > 1`` the children of different parents are generated in
    worker processes; the output is identical to the sequential run.
    """
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise EnumerationError(f"connected enumeration supports 1 <= n <= {MAX_CONNECTED_ORDER}, got {n}")
    return iter(_connected_level(n, jobs))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_connected(n))


# trees ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    found: dict[CanonicalCode, Graph] = {}
    for parent in _tree_level(n - 1):
        _, gens = canonical_labeling(parent)
        reps = _orbit_reps(parent.n, list(gens), [])
        for v in sorted(set(reps)):
            rows = list(parent.adj) + [1 << v]
            rows[v] |= 1 << parent.n
            child = Graph(n, tuple(rows))
            code = canonical_form(child)
            if code not in found:
                found[code] = canonical_graph(child)
    return tuple(found[c] for c in sorted(found))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every tree on ``n`` vertices once up to isomorphism, by leaf addition with dedup."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise EnumerationError(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}, got {n}")
    return iter(_tree_level(n))


def trees(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_trees(n))


# classes and extremal search -------------------------------------------------------

def enumerate_class(c: ClassConstraint, jobs: int = 1) -> Iterator[Graph]:
    for g in enumerate_connected(c.n, jobs=jobs):
        if in_class(g, c):
            yield g


@dataclass
class ExtremalReport:
    constraint: ClassConstraint
    index: str
    direction: str
    value: int
    witnesses: list[CanonicalCode]
    class_size: int
    runtime_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "class": self.constraint.kind,
            "n": self.constraint.n,
            "bound": self.constraint.bound,
            "index": self.index,
            "direction": self.direction,
            "value": str(self.value),
            "witnesses": list(self.witnesses),
            "class_size": self.class_size,
        }


def extremal_search(c: ClassConstraint, index: str, direction: str, jobs: int = 1) -> ExtremalReport:
    """Exact max or min of ``index`` over the class with the complete witness set."""
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    start = time.perf_counter()
    best: int | None = None
    witnesses: list[CanonicalCode] = []
    size = 0
    for g in enumerate_class(c, jobs=jobs):
        size += 1
        value = index_value(g, index)
        if best is None or (value > best if direction == "max" else value < best):
            best = value
            witnesses = [canonical_form(g)]
        elif value == best:
            witnesses.append(canonical_form(g))
    if best is None:
        raise EmptyClassError(f"class {c.label} is empty")
    return ExtremalReport(
        constraint=c,
        index=index,
        direction=direction,
        value=best,
        witnesses=sorted(witnesses),
        class_size=size,
        runtime_ms=(time.perf_counter() - start) * 1000.0,
    )
