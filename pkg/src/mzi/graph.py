"""Simple undirected graphs stored as per-vertex bitsets, plus graph6 I/O."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid vertices, edges or graph construction arguments."""


class Graph6Error(ValueError):
    """Raised when a graph6 string is malformed."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] >> v & 1
        ]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range 0..{n - 1}")


def edge_add(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise GraphError(f"cannot add self-loop at {u}")
    if g.has_edge(u, v):
        raise GraphError(f"edge {u}{v} already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def edge_delete(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"edge {u}{v} not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


def reachable(g: Graph, start: int, allowed: int | None = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside the ``allowed`` mask."""
    if allowed is None:
        allowed = (1 << g.n) - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph) -> tuple[int, list[list[int]]]:
    """Return the number of components and the vertex partition, in order of least vertex."""
    remaining = (1 << g.n) - 1
    parts = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reachable(g, start, remaining)
        parts.append(list(iter_bits(comp)))
        remaining &= ~comp
    return len(parts), parts


def is_connected(g: Graph) -> bool:
    return reachable(g, 0) == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.num_edges() == g.n - 1 and is_connected(g)


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Apply a permutation: vertex ``v`` of ``g`` becomes vertex ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        mask = 0
        for u in iter_bits(row):
            mask |= 1 << perm[u]
        rows[perm[v]] = mask
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled by their position in the list."""
    index = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        mask = 0
        for u in iter_bits(g.adj[v]):
            if u in index:
                mask |= 1 << index[u]
        rows.append(mask)
    return Graph(len(vertices), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


# graph6 ---------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) for c in s]
    for c in codes:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside 63..126")
    if codes[0] == 126:
        if len(codes) < 4 or codes[1] == 126:
            raise Graph6Error("unsupported or truncated order field")
        n = (codes[1] - 63) << 12 | (codes[2] - 63) << 6 | (codes[3] - 63)
        data = codes[4:]
        if n < 63:
            raise Graph6Error("long order field used for n < 63")
    else:
        n = codes[0] - 63
        data = codes[1:]
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(data)}")
    bits = []
    for c in data:
        value = c - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
