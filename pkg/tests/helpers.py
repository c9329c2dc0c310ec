"""Shared test oracles, independent of the library's search machinery."""

from itertools import combinations, permutations

from token_covers.graphs import Multigraph, SimpleGraph


def brute_force_isomorphism(X, Y):
    """All-permutations isomorphism oracle (use only for <= 8 vertices)."""
    n = X.vertex_count
    if n != Y.vertex_count or X.edge_count != Y.edge_count:
        return None
    target = set(Y.edges)
    for p in permutations(range(n)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in target
               for u, v in X.edges):
            return p
    return None


def brute_force_automorphisms(X):
    """All automorphisms of X by exhaustive enumeration."""
    n = X.vertex_count
    target = set(X.edges)
    found = []
    for p in permutations(range(n)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in target
               for u, v in X.edges):
            found.append(p)
    return found


def complement(X: SimpleGraph) -> SimpleGraph:
    n = X.vertex_count
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not X.has_edge(u, v)]
    return SimpleGraph(n, edges)


def kneser(n: int, k: int) -> SimpleGraph:
    """k-subsets of [n], adjacent when disjoint (Petersen = kneser(5, 2))."""
    subs = list(combinations(range(n), k))
    edges = []
    for i, a in enumerate(subs):
        sa = set(a)
        for j in range(i + 1, len(subs)):
            if not sa & set(subs[j]):
                edges.append((i, j))
    return SimpleGraph(len(subs), edges)


def disjoint_union(A: SimpleGraph, B: SimpleGraph) -> SimpleGraph:
    off = A.vertex_count
    edges = list(A.edges) + [(u + off, v + off) for u, v in B.edges]
    return SimpleGraph(off + B.vertex_count, edges)


def token_degree_oracle(X: SimpleGraph, subset) -> int:
    """Degree of a token-graph vertex: edges with one endpoint inside."""
    inside = set(subset)
    return sum(1 for u, v in X.edges if (u in inside) ^ (v in inside))


def random_simple_graph(rng, n: int, p: float = 0.5) -> SimpleGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return SimpleGraph(n, edges)


def relabel(X: SimpleGraph, images) -> SimpleGraph:
    return SimpleGraph(X.vertex_count,
                       [(images[u], images[v]) for u, v in X.edges])


def random_multigraph(rng, n: int, m_edges: int) -> Multigraph:
    edges = []
    for _ in range(m_edges):
        u = rng.randrange(n)
        v = rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, edges)
