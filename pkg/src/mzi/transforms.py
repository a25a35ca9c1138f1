"""Graph surgeries used in the extremal arguments.

Each transform returns a new graph. The monotonicity each one is paired
with is checked by the verification suites, not enforced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, edge_add, edge_delete, is_tree, iter_bits, reachable
from .indices import pi1_exact, pi2_exact


class TransformError(ValueError):
    pass


def _move_edges(g: Graph, src: int, dst: int, targets: Iterable[int]) -> Graph:
    for x in targets:
        g = edge_delete(g, src, x)
        g = edge_add(g, dst, x)
    return g


def neighbor_transfer(g: Graph, u: int, v: int, S: Iterable[int]) -> Graph:
    """Replace the edges v-x by u-x for every x in S, where S lies in N(v) minus N(u)."""
    S = sorted(set(S))
    if not S:
        raise TransformError("transfer set is empty")
    if u == v:
        raise TransformError("u and v must differ")
    if g.has_edge(u, v):
        raise TransformError(f"{u} and {v} are adjacent")
    allowed = g.adj[v] & ~g.adj[u] & ~(1 << u)
    bad = [x for x in S if not allowed >> x & 1]
    if bad:
        raise TransformError(f"vertices {bad} are not in N(v) \\ N(u)")
    return _move_edges(g, v, u, S)


def branches(t: Graph, v: int) -> list[tuple[int, int]]:
    """Branches of ``v`` as (root neighbour, vertex mask of the component of t - v)."""
    allowed = ((1 << t.n) - 1) & ~(1 << v)
    return [(x, reachable(t, x, allowed)) for x in iter_bits(t.adj[v])]


def _tree_pair(t: Graph, v2: int, v1: int) -> None:
    if not is_tree(t):
        raise TransformError("branch transforms need a tree")
    if v1 == v2:
        raise TransformError("v1 and v2 must differ")
    for v in (v1, v2):
        if not 0 <= v < t.n:
            raise TransformError(f"vertex {v} out of range")


def _away_from(t: Graph, v2: int, v1: int) -> list[int]:
    """Roots of the branches of v2 that do not contain v1, in increasing order."""
    return sorted(x for x, mask in branches(t, v2) if not mask >> v1 & 1)


def branch_transfer_all(t: Graph, v2: int, v1: int) -> Graph:
    """Reattach every branch of v2 to v1 except the one towards v1 and one more.

    v2 keeps the neighbour on its path to v1 and its lowest-labelled other
    neighbour, so it ends with degree 2.
    """
    _tree_pair(t, v2, v1)
    away = _away_from(t, v2, v1)
    if len(away) < 2:
        raise TransformError(f"vertex {v2} has no transferable branch")
    return _move_edges(t, v2, v1, away[1:])


def branch_move_one(t: Graph, v2: int, v1: int, root: int | None = None) -> Graph:
    """Move one branch of v2 that avoids v1 onto v1.

    ``root`` picks the branch by its neighbour of v2; by default the lowest is used.
    """
    _tree_pair(t, v2, v1)
    away = _away_from(t, v2, v1)
    if not away:
        raise TransformError(f"vertex {v2} has no branch avoiding {v1}")
    if root is None:
        root = away[0]
    elif root not in away:
        raise TransformError(f"{root} does not root a branch of {v2} avoiding {v1}")
    return _move_edges(t, v2, v1, [root])


def pendant_move(g: Graph, vi: int, vj: int) -> Graph:
    """Reattach the lowest-labelled pendant neighbour of vi to vj."""
    if vi == vj:
        raise TransformError("source and target must differ")
    deg = g.degrees()
    pendants = [x for x in iter_bits(g.adj[vi]) if deg[x] == 1 and x != vj]
    if not pendants:
        raise TransformError(f"vertex {vi} has no pendant neighbour to move")
    return _move_edges(g, vi, vj, pendants[:1])


@dataclass(frozen=True)
class TransformStep:
    kind: str
    source: int
    target: int
    moved: tuple[int, ...]
    before: tuple[int, int]
    after: tuple[int, int]

    @classmethod
    def record(cls, kind: str, source: int, target: int, moved: Iterable[int],
               g: Graph, h: Graph) -> "TransformStep":
        return cls(kind, source, target, tuple(moved),
                   (pi1_exact(g), pi2_exact(g)), (pi1_exact(h), pi2_exact(h)))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "source": self.source,
            "target": self.target,
            "moved": list(self.moved),
            "before": {"pi1": str(self.before[0]), "pi2": str(self.before[1])},
            "after": {"pi1": str(self.after[0]), "pi2": str(self.after[1])},
        }
