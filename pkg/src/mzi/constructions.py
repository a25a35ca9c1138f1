"""Named graphs and the extremal families for connectivity and pendant-count classes."""

from __future__ import annotations

from .canon import canonical_form
from .graph import MAX_ORDER, Graph, GraphError


class ConstructionError(ValueError):
    pass


def _order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ConstructionError(f"order must be in 1..{MAX_ORDER}, got {n}")


def empty(n: int) -> Graph:
    _order(n)
    return Graph.empty(n)


def complete(n: int) -> Graph:
    _order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    _order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star with centre 0."""
    _order(n)
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise ConstructionError(f"combined order {g1.n + g2.n} exceeds {MAX_ORDER}")
    return Graph(g1.n + g2.n, g1.adj + tuple(row << g1.n for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    union = disjoint_union(g1, g2)
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = [row | right if v < g1.n else row | left for v, row in enumerate(union.adj)]
    return Graph(union.n, tuple(rows))


def k_n_k(n: int, k: int) -> Graph:
    """K_{n-1} on vertices 0..n-2 plus vertex n-1 joined to vertices 0..k-1."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ConstructionError(f"K_n^k needs 1 <= k <= n-1, got n={n}, k={k}")
    _order(n)
    edges = [(u, v) for u in range(n - 1) for v in range(u + 1, n - 1)]
    edges += [(i, n - 1) for i in range(k)]
    return Graph.from_edges(n, edges)


def sandwich(j: int, h: Graph, m: int) -> Graph:
    """K_j joined to ``h``, ``h`` joined to K_m, with no edges between K_j and K_m."""
    if j < 1 or m < 1:
        raise ConstructionError(f"sandwich needs j >= 1 and m >= 1, got j={j}, m={m}")
    n = j + h.n + m
    if n > MAX_ORDER:
        raise ConstructionError(f"sandwich order {n} exceeds {MAX_ORDER}")
    a = complete(j).adj
    b = h.adj
    c = complete(m).adj
    hmask = ((1 << h.n) - 1) << j
    jmask = (1 << j) - 1
    mmask = ((1 << m) - 1) << (j + h.n)
    rows = [row | hmask for row in a]
    rows += [row << j | jmask | mmask for row in b]
    rows += [row << (j + h.n) | hmask for row in c]
    return Graph(n, tuple(rows))


def _clique_with_pendants(core: int, counts: list[int]) -> Graph:
    n = core + sum(counts)
    _order(n)
    edges = [(u, v) for u in range(core) for v in range(u + 1, core)]
    nxt = core
    for v, c in enumerate(counts):
        for _ in range(c):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(n, edges)


def pendant_distribution(n: int, p: int) -> tuple[int, int]:
    """(l, t) with p = l(n-p) + t, 0 <= t < n-p."""
    return divmod(p, n - p)


def g_a(n: int, p: int) -> Graph:
    """K_{n-p} with p pendants spread as evenly as possible; the first t clique vertices carry l+1."""
    if p < 2 or n - p < 1:
        raise ConstructionError(f"G_a needs p >= 2 and n-p >= 1, got n={n}, p={p}")
    core = n - p
    ell, t = pendant_distribution(n, p)
    return _clique_with_pendants(core, [ell + 1] * t + [ell] * (core - t))


def g_s(n: int, p: int) -> Graph:
    """K_{n-p} with all p pendants on clique vertex 0."""
    if not 2 <= p <= n - 2:
        raise ConstructionError(f"G_s needs 2 <= p <= n-2, got n={n}, p={p}")
    core = n - p
    return _clique_with_pendants(core, [p] + [0] * (core - 1))


def a1_tree(n: int, p: int, legs: list[int]) -> Graph:
    """Spider: centre 0 with p pendant paths of the given lengths."""
    if p < 2:
        raise ConstructionError(f"spider needs p >= 2, got {p}")
    if len(legs) != p or any(leg < 1 for leg in legs) or sum(legs) != n - 1:
        raise ConstructionError(f"legs must be {p} positive parts summing to {n - 1}, got {legs}")
    _order(n)
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(n, edges)


def _partitions(total: int, parts: int, largest: int) -> list[list[int]]:
    if parts == 0:
        return [[]] if total == 0 else []
    out = []
    for first in range(min(largest, total - (parts - 1)), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            out.append([first] + rest)
    return out


def a1_trees(n: int, p: int) -> list[Graph]:
    """All spiders with p legs on n vertices, one per isomorphism class.

    With p = 2 every partition gives the path, so the list is deduplicated.
    """
    if p < 2 or n - 1 < p:
        raise ConstructionError(f"spiders need 2 <= p <= n-1, got n={n}, p={p}")
    seen: dict[str, Graph] = {}
    for legs in _partitions(n - 1, p, n - 1):
        g = a1_tree(n, p, legs)
        seen.setdefault(canonical_form(g), g)
    return [seen[c] for c in sorted(seen)]


def a1_degree_sequence(n: int, p: int) -> list[int]:
    return [p] + [2] * (n - p - 1) + [1] * p


def a2_parameters(n: int, p: int) -> tuple[int, int]:
    """(k, r) with 2n-p-2 = k(n-p) + r, 0 <= r <= n-p-1."""
    if p < 2 or n - p < 1:
        raise ConstructionError(f"balanced trees need p >= 2 and n-p >= 1, got n={n}, p={p}")
    k, r = divmod(2 * n - p - 2, n - p)
    if k < 2:
        raise ConstructionError(f"no tree with the required degrees for n={n}, p={p}")
    return k, r


def a2_degree_sequence(n: int, p: int) -> list[int]:
    k, r = a2_parameters(n, p)
    return [k + 1] * r + [k] * (n - p - r) + [1] * p


def a2_trees(n: int, p: int) -> list[Graph]:
    """All trees (up to isomorphism) with p leaves and internal degrees as equal as possible."""
    from .enumeration import enumerate_trees

    target = sorted(a2_degree_sequence(n, p), reverse=True)
    found = [t for t in enumerate_trees(n) if sorted(t.degrees(), reverse=True) == target]
    if not found:
        raise ConstructionError(f"no tree realises degree sequence {target}")
    return sorted(found, key=canonical_form)


FAMILIES = ("complete", "path", "star", "knk", "sandwich", "ga", "gs", "a1", "a2")


def build(family: str, n: int, k: int | None = None, p: int | None = None,
          legs: list[int] | None = None, j: int | None = None) -> list[Graph]:
    """Dispatch used by the CLI; returns a list because the a2 family can have several members."""
    def need(name: str, value: int | None) -> int:
        if value is None:
            raise ConstructionError(f"family {family!r} needs --{name}")
        return value

    try:
        if family == "complete":
            return [complete(n)]
        if family == "path":
            return [path(n)]
        if family == "star":
            return [star(n)]
        if family == "knk":
            return [k_n_k(n, need("k", k))]
        if family == "sandwich":
            jj, kk = need("j", j), need("k", k)
            return [sandwich(jj, complete(kk), n - kk - jj)]
        if family == "ga":
            return [g_a(n, need("p", p))]
        if family == "gs":
            return [g_s(n, need("p", p))]
        if family == "a1":
            pp = need("p", p)
            return [a1_tree(n, pp, legs)] if legs is not None else a1_trees(n, pp)
        if family == "a2":
            return a2_trees(n, need("p", p))
    except GraphError as exc:
        raise ConstructionError(str(exc)) from exc
    raise ConstructionError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
