"""Canonical labelling by partition refinement and individualisation.

The search keeps the leaf with the largest relabelled adjacency and prunes
children that lie in one orbit of the automorphisms found so far that fix the
current prefix. Every leaf equivalent to the first leaf yields a generator,
so the returned generators generate the full automorphism group.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, iter_bits, relabel, to_graph6

CanonicalCode = str


def _mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to the coarsest equitable refinement.

    Fragments of a split cell are ordered by ascending neighbour count, so the
    result commutes with relabelling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        s = 0
        while s < len(cells):
            wmask = _mask(cells[s])
            out: list[list[int]] = []
            split_here = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split_here = True
                    out.extend(groups[k] for k in sorted(groups))
            if split_here:
                cells = out
                changed = True
            s += 1
    return cells


def _individualize(cells: list[list[int]], index: int, v: int) -> list[list[int]]:
    cell = cells[index]
    rest = [w for w in cell if w != v]
    return cells[:index] + [[v], rest] + cells[index + 1:]


def _orbit_reps(n: int, generators: list[tuple[int, ...]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        if any(gen[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    for v in order:
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << pos[u]
        key.append(m)
    return tuple(key)


def _degree_partition(g: Graph) -> list[list[int]]:
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_degree.setdefault(d, []).append(v)
    return [by_degree[d] for d in sorted(by_degree)]


@lru_cache(maxsize=1 << 16)
def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Return ``(order, generators)``.

    ``order[i]`` is the vertex of ``g`` that receives canonical label ``i``;
    ``generators`` generate Aut(g), each as a tuple mapping ``v -> gen[v]``.
    """
    n = g.n
    adj = g.adj
    generators: list[tuple[int, ...]] = []
    state: dict[str, object] = {}

    def leaf(order: list[int]) -> None:
        key = _leaf_key(adj, order)
        if "first" not in state:
            state["first"] = (key, order)
            state["best"] = (key, order)
            return
        for ref in ("first", "best"):
            ref_key, ref_order = state[ref]  # type: ignore[misc]
            if key == ref_key:
                gen = [0] * n
                for a, b in zip(ref_order, order):
                    gen[a] = b
                generators.append(tuple(gen))
                return
        if key > state["best"][0]:  # type: ignore[index]
            state["best"] = (key, order)

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf([c[0] for c in cells])
            return
        explored: list[int] = []
        for v in cells[target]:
            if explored:
                reps = _orbit_reps(n, generators, prefix)
                if reps[v] in {reps[w] for w in explored}:
                    continue
            explored.append(v)
            search(refine(adj, _individualize(cells, target, v)), prefix + [v])

    search(refine(adj, _degree_partition(g)), [])
    best_order = state["best"][1]  # type: ignore[index]
    return tuple(best_order), tuple(generators)


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalCode:
    """graph6 string of the canonically relabelled graph; equal iff isomorphic."""
    return to_graph6(canonical_graph(g))


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (least vertex) for every vertex."""
    _, gens = canonical_labeling(g)
    return _orbit_reps(g.n, list(gens), [])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)
