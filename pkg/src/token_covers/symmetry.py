"""Automorphism groups, orbits, transitivity predicates, isomorphism
testing, free-action search, and the edge-transitive token-graph
classification checker.

The heavy lifting (equitable refinement + backtracking) lives in the
search kernel; everything returned by it is re-verified here with plain
adjacency checks, independent of the search path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import search
from .algebra import Closure, Permutation, group_closure
from .graphs import SimpleGraph, is_connected, make_family
from .report import Evidence, VerificationReport
from .tokens import token_graph

DEFAULT_VERTEX_CAP = 200
DEFAULT_GROUP_CAP = 10**6


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def is_automorphism(X: SimpleGraph, p: Permutation) -> bool:
    """Plain adjacency re-check, independent of the search kernel."""
    if p.degree != X.vertex_count:
        return False
    return all(X.has_edge(p(u), p(v)) for u, v in X.edges)


class AutGroup:
    """Generators of Aut(X) plus a lazily computed, capped closure."""

    def __init__(self, degree: int, generators):
        self.degree = degree
        self.generators = tuple(generators)
        self._closure = None

    def closure(self, cap: int = DEFAULT_GROUP_CAP) -> Closure:
        cached = self._closure
        if cached is not None and (cached.complete or len(cached.elements) >= cap):
            return cached
        self._closure = group_closure(self.generators, cap, degree=self.degree)
        return self._closure

    def order(self, cap: int = DEFAULT_GROUP_CAP):
        """(order-or-lower-bound, exact flag)."""
        cl = self.closure(cap)
        return len(cl.elements), cl.complete

    def __repr__(self):
        return f"AutGroup(degree={self.degree}, generators={len(self.generators)})"


def automorphisms(X: SimpleGraph, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> AutGroup:
    """Generating set of Aut(X), deterministic for a given graph."""
    if X.vertex_count > max_vertices:
        raise ValueError(f"graph too large ({X.vertex_count} > {max_vertices} vertices)")
    gens = [Permutation(t) for t in search.automorphism_generators(X.adjacency_masks)]
    for g in gens:
        if g.is_identity or not is_automorphism(X, g):
            raise RuntimeError("search kernel returned an invalid generator")
    return AutGroup(X.vertex_count, gens)


def vertex_orbits(X: SimpleGraph, aut: AutGroup = None):
    """Orbits of Aut(X) on vertices, each sorted, ordered by minimum."""
    if aut is None:
        aut = automorphisms(X)
    uf = _UnionFind(X.vertex_count)
    for g in aut.generators:
        for v in range(X.vertex_count):
            uf.union(v, g(v))
    groups = {}
    for v in range(X.vertex_count):
        groups.setdefault(uf.find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def edge_orbits(X: SimpleGraph, aut: AutGroup = None):
    """Orbits of Aut(X) on edges (generator closure, no full enumeration)."""
    if aut is None:
        aut = automorphisms(X)
    edges = X.edges
    index = {e: i for i, e in enumerate(edges)}
    uf = _UnionFind(len(edges))
    for g in aut.generators:
        for i, (u, v) in enumerate(edges):
            gu, gv = g(u), g(v)
            uf.union(i, index[(gu, gv) if gu < gv else (gv, gu)])
    groups = {}
    for i in range(len(edges)):
        groups.setdefault(uf.find(i), []).append(edges[i])
    return [groups[r] for r in sorted(groups)]


def is_vertex_transitive(X: SimpleGraph, aut: AutGroup = None) -> bool:
    return len(vertex_orbits(X, aut)) <= 1


def is_edge_transitive(X: SimpleGraph, aut: AutGroup = None) -> bool:
    """Single Aut-orbit on edges (vacuously true for edgeless graphs)."""
    return len(edge_orbits(X, aut)) <= 1


def is_isomorphic(X: SimpleGraph, Y: SimpleGraph, *,
                  max_vertices: int = DEFAULT_VERTEX_CAP):
    """A vertex bijection X -> Y preserving adjacency both ways, or None.

    The witness is deterministic (first found in canonical search order)
    and re-verified edge-by-edge before being returned.
    """
    if max(X.vertex_count, Y.vertex_count) > max_vertices:
        raise ValueError("graph too large for isomorphism search")
    if X.vertex_count != Y.vertex_count or X.edge_count != Y.edge_count:
        return None
    raw = search.isomorphism_witness(X.adjacency_masks, Y.adjacency_masks)
    if raw is None:
        return None
    p = Permutation(raw)
    mapped = {tuple(sorted((p(u), p(v)))) for u, v in X.edges}
    if mapped != set(Y.edges):
        raise RuntimeError("search kernel returned an invalid witness")
    return p


@dataclass(frozen=True)
class ActionSearch:
    """Order-m free actions found, plus whether the enumeration was
    exhaustive (False only when the group closure overflowed the budget)."""

    actions: tuple
    complete: bool


def acts_freely(p: Permutation, m: int) -> bool:
    """Every cycle of p has length exactly m (so <p> acts freely)."""
    return all(len(c) == m for c in p.orbits())


def free_cyclic_actions(X: SimpleGraph, m: int, *, budget: int = DEFAULT_GROUP_CAP,
                        aut: AutGroup = None) -> ActionSearch:
    """Automorphisms of order exactly m all of whose cycles have length m.

    Enumerates the full automorphism group when its order fits the budget;
    otherwise filters the partial closure and reports incompleteness.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if X.vertex_count % m != 0:
        return ActionSearch((), True)
    if aut is None:
        aut = automorphisms(X)
    cl = aut.closure(budget)
    found = sorted(
        (p for p in cl.elements if acts_freely(p, m)),
        key=lambda p: p.images,
    )
    return ActionSearch(tuple(found), cl.complete)


# ---------------------------------------------------------------------------
# classification checker


def _canonical_family(name, params):
    """Fold family tags that coincide with classification families."""
    if name == "path" and params == (2,):
        return "star", (1,)
    if name == "path" and params == (3,):
        return "star", (2,)
    if name == "cycle" and params == (3,):
        return "complete", (3,)
    if name == "cycle" and params == (4,):
        return "complete_bipartite", (2, 2)
    if name == "complete_bipartite":
        m, n = params
        if m > n:
            m, n = n, m
        if m == 1:
            return "star", (n,)
        return name, (m, n)
    return name, tuple(params)


def _in_classification(name, params, k):
    """Whether (family, k) is one of the edge-transitive cases."""
    if name == "complete":
        n = params[0]
        return 2 <= k <= n - 1
    if name == "star":
        n = params[0]
        return 2 <= k <= n
    if name == "complete_bipartite":
        m, n = params
        if m == n:
            return k == 2 or k == 2 * (n - 1)
        if m == 2:
            return 2 * k == n + 2
        return False
    return False


def zz_check(family: str, params, k: int, *,
             max_vertices: int = DEFAULT_VERTEX_CAP) -> VerificationReport:
    """Compare computed edge-transitivity of a token graph against the
    classification's prediction for the tagged family.

    k = 1 and k = |V| - 1 reduce to the base graph itself and are predicted
    by its own edge-transitivity (outside the classification's k-range).
    """
    X = make_family(family, *params)
    if not is_connected(X):
        raise ValueError("classification check requires a connected graph")
    n_x = X.vertex_count
    if not 1 <= k <= n_x - 1:
        raise ValueError(f"k={k} out of range 1..{n_x - 1}")
    name, norm = _canonical_family(family, tuple(params))
    if k == 1 or k == n_x - 1:
        predicted = is_edge_transitive(X)
        rule = "k reduces the token graph to the base graph"
    else:
        direct = _in_classification(name, norm, k)
        mirrored = _in_classification(name, norm, n_x - k)
        predicted = direct or mirrored
        rule = f"classification case for {name}{norm}" if predicted else "no classification case matches"
    F = token_graph(X, k)
    if F.vertex_count > max_vertices:
        raise ValueError(f"token graph too large ({F.vertex_count} > {max_vertices})")
    orbits = edge_orbits(F)
    computed = len(orbits) <= 1
    passed = computed == predicted
    family_tag = ":".join([family, *map(str, params)])
    evidence = [
        Evidence("family", family_tag),
        Evidence("k", k),
        Evidence("token_vertices", F.vertex_count),
        Evidence("token_edges", F.edge_count),
        Evidence("predicted_edge_transitive", predicted),
        Evidence("computed_edge_transitive", computed),
        Evidence("edge_orbit_count", len(orbits)),
        Evidence("rule", rule, kind="note"),
    ]
    if not passed:
        if len(orbits) > 1:
            witness = [list(orbits[0][0]), list(orbits[1][0])]
        else:
            witness = "token graph has a single edge orbit"
        evidence.append(Evidence("disagreement", witness, kind="counterexample"))
    return VerificationReport.from_outcome(f"zz-{family_tag}-k{k}", passed, evidence)
