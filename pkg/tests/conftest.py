from itertools import permutations

from hypothesis import strategies as st

from mzi.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [e for e, keep in zip(pairs, bits) if keep])
    if connected and not is_connected(g):
        # chain the components with a path through their lowest vertices
        edges = g.edges() + [(i, i + 1) for i in range(n - 1) if not g.has_edge(i, i + 1)]
        g = Graph.from_edges(n, edges)
    return g


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically largest adjacency matrix over all relabellings."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(tuple(int(g.has_edge(perm[i], perm[j])) for j in range(g.n)) for i in range(g.n))
        if best is None or key > best:
            best = key
    return best


def automorphism_count(g: Graph) -> int:
    edges = set(g.edges())
    count = 0
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            count += 1
    return count


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
