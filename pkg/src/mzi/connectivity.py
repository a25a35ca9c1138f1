"""Vertex/edge connectivity by unit-capacity max-flow, pendant counts and class membership."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, is_connected, iter_bits


class ConnectivityError(ValueError):
    pass


def max_flow(cap: list[dict[int, int]], s: int, t: int, limit: int | None = None) -> int:
    """Edmonds-Karp on a residual map ``cap[u][v]``; mutates ``cap``.

    Stops early once the flow reaches ``limit``.
    """
    flow = 0
    while limit is None or flow < limit:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in prev:
                    prev[v] = u
                    queue.append(v)
        if t not in prev:
            break
        bottleneck = None
        v = t
        while v != s:
            u = prev[v]
            c = cap[u][v]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = u
        v = t
        while v != s:
            u = prev[v]
            cap[u][v] -= bottleneck
            cap[v][u] = cap[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Max number of internally disjoint s-t paths, s and t non-adjacent."""
    if g.has_edge(s, t):
        raise ConnectivityError("local vertex connectivity needs non-adjacent vertices")
    big = g.n
    # vertex v -> in-node 2v, out-node 2v+1
    cap: list[dict[int, int]] = [dict() for _ in range(2 * g.n)]
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        for u in iter_bits(g.adj[v]):
            cap[2 * v + 1][2 * u] = big
    return max_flow(cap, 2 * s + 1, 2 * t, limit)


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    cap: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            cap[v][u] = 1
    return max_flow(cap, s, t, limit)


def _require_connected(g: Graph) -> None:
    if g.n < 2:
        raise ConnectivityError("connectivity needs at least 2 vertices")
    if not is_connected(g):
        raise ConnectivityError("graph is disconnected")


@lru_cache(maxsize=1 << 17)
def vertex_connectivity(g: Graph) -> int:
    """kappa(g). Uses the Esfahanian-Hakimi pair reduction around a min-degree vertex."""
    _require_connected(g)
    n = g.n
    deg = g.degrees()
    if min(deg) == n - 1:
        return n - 1
    v = min(range(n), key=lambda x: deg[x])
    best = deg[v]
    for w in range(n):
        if w != v and not g.has_edge(v, w):
            best = min(best, local_vertex_connectivity(g, v, w, best))
    nbrs = g.neighbors(v)
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, local_vertex_connectivity(g, x, y, best))
    return best


@lru_cache(maxsize=1 << 17)
def edge_connectivity(g: Graph) -> int:
    """kappa'(g): the global minimum edge cut equals min over t of the 0-t cut."""
    _require_connected(g)
    best = min(g.degrees())
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t, best))
    return best


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 1)


@dataclass(frozen=True)
class ClassConstraint:
    """Connected graphs of order ``n`` with kappa <= k (V), kappa' <= k (E) or exactly p pendants (P)."""

    n: int
    kind: str
    bound: int

    def __post_init__(self) -> None:
        if self.kind not in ("V", "E", "P"):
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("class order must be positive")
        if self.kind in ("V", "E"):
            if not 1 <= self.bound <= self.n - 1:
                raise ValueError(f"connectivity cap must satisfy 1 <= k <= n-1, got k={self.bound}, n={self.n}")
        elif not 2 <= self.bound <= self.n - 1:
            raise ValueError(f"pendant count must satisfy 2 <= p <= n-1, got p={self.bound}, n={self.n}")

    @classmethod
    def vertex(cls, n: int, k: int) -> "ClassConstraint":
        return cls(n, "V", k)

    @classmethod
    def edge(cls, n: int, k: int) -> "ClassConstraint":
        return cls(n, "E", k)

    @classmethod
    def pendant(cls, n: int, p: int) -> "ClassConstraint":
        return cls(n, "P", p)

    @property
    def label(self) -> str:
        sym = {"V": "k", "E": "k", "P": "p"}[self.kind]
        return f"{self.kind}(n={self.n}, {sym}={self.bound})"


def in_class(g: Graph, c: ClassConstraint) -> bool:
    if g.n != c.n or not is_connected(g):
        return False
    if c.kind == "P":
        return pendant_count(g) == c.bound
    if g.n < 2:
        return False
    if c.kind == "V":
        return vertex_connectivity(g) <= c.bound
    return edge_connectivity(g) <= c.bound
