"""Token graphs and the comparison families they are matched against.

k-subsets are plain sorted tuples throughout; vertex order of every
construction is the lexicographic order of ``itertools.combinations``, so
vertex ids are reproducible without carrying subset objects around.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .algebra import Permutation
from .graphs import SimpleGraph

MAX_BASE_VERTICES = 64
MAX_TOKEN_VERTICES = 100_000


def ksubsets(n: int, k: int):
    """All k-subsets of 0..n-1 as sorted tuples, lexicographic."""
    return list(combinations(range(n), k))


def subset_label(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def token_graph(X: SimpleGraph, k: int) -> SimpleGraph:
    """k-token graph of X: k-subsets adjacent when their symmetric
    difference is an edge of X.  Vertex i is ``ksubsets(n, k)[i]``."""
    n = X.vertex_count
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    if n > MAX_BASE_VERTICES:
        raise ValueError(f"base graph too large ({n} > {MAX_BASE_VERTICES} vertices)")
    if comb(n, k) > MAX_TOKEN_VERTICES:
        raise ValueError("token graph exceeds the supported size")
    subs = ksubsets(n, k)
    index = {s: i for i, s in enumerate(subs)}
    edges = []
    for i, sub in enumerate(subs):
        inside = set(sub)
        for u, v in X.edges:
            if (u in inside) ^ (v in inside):
                j = index[tuple(sorted(inside ^ {u, v}))]
                if i < j:
                    edges.append((i, j))
    return SimpleGraph(len(subs), edges, labels=[subset_label(s) for s in subs])


def johnson(n: int, k: int) -> SimpleGraph:
    """Johnson graph J(n, k): k-subsets adjacent when they intersect in
    exactly k - 1 elements."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    subs = ksubsets(n, k)
    edges = []
    for i, a in enumerate(subs):
        sa = set(a)
        for j in range(i + 1, len(subs)):
            if len(sa & set(subs[j])) == k - 1:
                edges.append((i, j))
    return SimpleGraph(len(subs), edges, labels=[subset_label(s) for s in subs])


def line_graph(X: SimpleGraph) -> SimpleGraph:
    """Vertices are the edges of X, adjacent when sharing an endpoint."""
    es = X.edges
    edges = []
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a in (c, d) or b in (c, d):
                edges.append((i, j))
    return SimpleGraph(len(es), edges, labels=[f"{u}-{v}" for u, v in es])


def subdivision(X: SimpleGraph) -> SimpleGraph:
    """One new vertex per edge; each edge replaced by a 2-path through it.

    Original vertices keep their ids; the vertex subdividing the e-th edge
    (in sorted edge order) is ``n + e``.
    """
    n = X.vertex_count
    edges = []
    for e, (u, v) in enumerate(X.edges):
        edges.append((u, n + e))
        edges.append((v, n + e))
    labels = [str(v) for v in range(n)] + [f"{u}-{v}" for u, v in X.edges]
    return SimpleGraph(n + X.edge_count, edges, labels=labels)


def inclusion_bigraph(n: int, a: int, b: int) -> SimpleGraph:
    """Bipartite inclusion graph between the a-subsets and b-subsets of
    0..n-1 (a-set adjacent to every b-set containing it).

    Concrete model of a doubled Johnson graph; vertices are the a-subsets
    (lexicographic) followed by the b-subsets.
    """
    if not 0 <= a < b <= n:
        raise ValueError(f"need 0 <= a < b <= n, got a={a}, b={b}, n={n}")
    lows = ksubsets(n, a)
    highs = ksubsets(n, b)
    offset = len(lows)
    edges = []
    for i, low in enumerate(lows):
        ls = set(low)
        for j, high in enumerate(highs):
            if ls <= set(high):
                edges.append((i, offset + j))
    labels = [subset_label(s) for s in lows] + [subset_label(s) for s in highs]
    return SimpleGraph(offset + len(highs), edges, labels=labels)


def induced_token_permutation(p: Permutation, k: int) -> Permutation:
    """Action of a base-vertex permutation on the k-subset vertices."""
    subs = ksubsets(p.degree, k)
    index = {s: i for i, s in enumerate(subs)}
    return Permutation(tuple(index[tuple(sorted(p(v) for v in s))] for s in subs))
