"""Dart-based multigraphs, simple graphs, standard families, serialization.

Two carrier types live here.  ``Multigraph`` permits loops and parallel
edges and carries voltage base graphs and covering lifts; each undirected
edge is realized as a pair of mutually reversed darts (``2*e`` and
``2*e + 1`` for edge ``e``).  ``SimpleGraph`` is the loop-free carrier used
for token graphs and everything downstream of them.

Both types are immutable after construction; every function in this module
is pure.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Mapping, Optional, Sequence


class Multigraph:
    """Undirected multigraph on vertices ``0..n-1`` with loops allowed.

    Edges are stored in insertion order; the position of an edge is its
    edge id.  Each non-loop edge is normalized to ``(min, max)`` so that
    exports and dart orientations are deterministic.
    """

    __slots__ = ("_n", "_edges", "_labels")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = (),
                 labels: Optional[Sequence[str]] = None):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        self._n = vertex_count
        normalized = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
            normalized.append((u, v) if u <= v else (v, u))
        self._edges = tuple(normalized)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != vertex_count:
                raise ValueError("labels length must equal vertex_count")
        self._labels = labels

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def labels(self):
        return self._labels

    @property
    def dart_count(self) -> int:
        return 2 * len(self._edges)

    def dart_endpoints(self, dart: int) -> tuple:
        """(tail, head) of a dart; dart ``2e`` runs along the stored edge."""
        u, v = self._edges[dart >> 1]
        return (u, v) if dart & 1 == 0 else (v, u)

    def reverse_dart(self, dart: int) -> int:
        return dart ^ 1

    def darts(self):
        """All darts as (tail, head, edge_id) triples."""
        out = []
        for e, (u, v) in enumerate(self._edges):
            out.append((u, v, e))
            out.append((v, u, e))
        return out

    def degree(self, v: int) -> int:
        """Vertex degree with loops counting twice."""
        return sum((u == v) + (w == v) for u, w in self._edges)

    def degrees(self):
        degs = [0] * self._n
        for u, v in self._edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def loop_count(self) -> int:
        return sum(1 for u, v in self._edges if u == v)

    def __eq__(self, other):
        return (isinstance(other, Multigraph)
                and self._n == other._n and self._edges == other._edges)

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Multigraph({self._n} vertices, {len(self._edges)} edges)"


class SimpleGraph:
    """Finite undirected simple graph on vertices ``0..n-1``.

    Adjacency is additionally exposed as per-vertex integer bitmasks
    (``adjacency_masks``), the representation the search kernels consume.
    """

    __slots__ = ("_n", "_edges", "_adj", "_labels")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = (),
                 labels: Optional[Sequence[str]] = None):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        self._n = vertex_count
        adj = [0] * vertex_count
        seen = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"loop at {u} not allowed in a simple graph")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._edges = tuple(sorted(seen))
        self._adj = tuple(adj)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != vertex_count:
                raise ValueError("labels length must equal vertex_count")
        self._labels = labels

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple:
        """Edges as (u, v) pairs with u < v, sorted."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def labels(self):
        return self._labels

    @property
    def adjacency_masks(self) -> tuple:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int):
        mask = self._adj[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self):
        return [m.bit_count() for m in self._adj]

    def relabeled(self, labels: Sequence[str]) -> "SimpleGraph":
        return SimpleGraph(self._n, self._edges, labels=labels)

    def __eq__(self, other):
        return (isinstance(other, SimpleGraph)
                and self._n == other._n and self._edges == other._edges)

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"SimpleGraph({self._n} vertices, {len(self._edges)} edges)"


# ---------------------------------------------------------------------------
# standard families


def complete(n: int) -> SimpleGraph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError("complete(n) requires n >= 1")
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> SimpleGraph:
    """Star K_{1,n}; vertex 0 is the center."""
    if n < 1:
        raise ValueError("star(n) requires n >= 1")
    return SimpleGraph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    """K_{m,n} with parts 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite(m, n) requires m, n >= 1")
    return SimpleGraph(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def path(n: int) -> SimpleGraph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise ValueError("path(n) requires n >= 1")
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> SimpleGraph:
    """Cycle on n vertices; n >= 3 (shorter cycles are not simple graphs)."""
    if n < 3:
        raise ValueError("cycle(n) requires n >= 3")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


FAMILY_BUILDERS = {
    "complete": (complete, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
}


def make_family(name: str, *params: int) -> SimpleGraph:
    """Build a named family graph, e.g. ``make_family("complete", 4)``."""
    if name not in FAMILY_BUILDERS:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILY_BUILDERS)}")
    builder, arity = FAMILY_BUILDERS[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# ---------------------------------------------------------------------------
# structural predicates


def underlying_simple(G: Multigraph) -> SimpleGraph:
    """Simple reduction: loops dropped, parallel classes collapsed."""
    seen = set()
    for u, v in G.edges:
        if u != v:
            seen.add((u, v))
    return SimpleGraph(G.vertex_count, sorted(seen), labels=G.labels)


def as_simple(G: Multigraph) -> SimpleGraph:
    """Strict conversion; raises if G has loops or parallel edges."""
    return SimpleGraph(G.vertex_count, G.edges, labels=G.labels)


def connected_components(G: SimpleGraph):
    """Vertex sets of the components, each sorted, ordered by minimum."""
    seen = [False] * G.vertex_count
    comps = []
    for start in range(G.vertex_count):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in G.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: SimpleGraph) -> bool:
    return len(connected_components(G)) <= 1


def _two_color_component(G: SimpleGraph, comp):
    """2-color a component from its minimum vertex; None on an odd cycle."""
    side = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        v = queue.popleft()
        for w in G.neighbors(v):
            if w not in side:
                side[w] = side[v] ^ 1
                queue.append(w)
            elif side[w] == side[v]:
                return None
    part0 = [v for v in comp if side[v] == 0]
    part1 = [v for v in comp if side[v] == 1]
    return part0, part1


def is_biregular(G: SimpleGraph):
    """Degrees of the two sides of a degree-uniform bipartition, if any.

    Returns ``(a, b)`` where ``a`` is the common degree of the side
    containing vertex 0, or ``None`` when no consistent 2-coloring with
    uniform side degrees exists.  Disconnected graphs are handled by
    searching over the per-component orientation choices.
    """
    if G.vertex_count == 0:
        return None
    comps = connected_components(G)
    infos = []  # (deg_side_of_min_vertex, deg_other_side or None, has vertex 0)
    for comp in comps:
        colored = _two_color_component(G, comp)
        if colored is None:
            return None
        part0, part1 = colored
        d0 = {G.degree(v) for v in part0}
        d1 = {G.degree(v) for v in part1}
        if len(d0) > 1 or len(d1) > 1:
            return None
        a = d0.pop()
        b = d1.pop() if d1 else None
        infos.append((a, b, 0 in comp))

    # candidate global degree pairs come from the first component with edges
    candidates = []
    for a, b, _ in infos:
        if b is not None:
            candidates = [(a, b), (b, a)]
            break
    if not candidates:
        return (0, 0)  # edgeless graph

    def fits(info, target):
        a, b, _ = info
        ta, tb = target
        if b is None:  # isolated vertex: its side must have degree 0
            if a == ta:  # prefer the unflipped side when both work
                return "keep"
            if a == tb:
                return "flip"
            return None
        if (a, b) == (ta, tb):
            return "keep"
        if (b, a) == (ta, tb):
            return "flip"
        return None

    for target in candidates:
        orientations = [fits(info, target) for info in infos]
        if all(o is not None for o in orientations):
            for info, o in zip(infos, orientations):
                if info[2]:  # component containing vertex 0
                    ta, tb = target
                    return (ta, tb) if o == "keep" else (tb, ta)
    return None


def srg_parameters(G: SimpleGraph):
    """(v, k, lambda, mu) when G is strongly regular, else None.

    Requires at least one adjacent and one non-adjacent vertex pair so that
    both parameters are determined; complete and edgeless graphs return None.
    """
    n = G.vertex_count
    degs = set(G.degrees())
    if n < 2 or len(degs) != 1:
        return None
    k = degs.pop()
    adj = G.adjacency_masks
    lam = set()
    mu = set()
    for u in range(n):
        for v in range(u + 1, n):
            common = (adj[u] & adj[v]).bit_count()
            (lam if G.has_edge(u, v) else mu).add(common)
            if len(lam) > 1 or len(mu) > 1:
                return None
    if not lam or not mu:
        return None
    return (n, k, lam.pop(), mu.pop())


# ---------------------------------------------------------------------------
# serialization


def to_dot(G, *, name: str = "G", edge_labels: Optional[Mapping[int, str]] = None) -> str:
    """Deterministic DOT export (undirected; loops as self-edges).

    ``edge_labels`` maps edge ids (Multigraph) or sorted-edge positions
    (SimpleGraph) to label strings.
    """
    lines = [f"graph {name} {{"]
    labels = G.labels
    for v in range(G.vertex_count):
        if labels is not None:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    if isinstance(G, Multigraph):
        order = sorted(range(G.edge_count), key=lambda e: (*G.edges[e], e))
    else:
        order = range(G.edge_count)
    for e in order:
        u, v = G.edges[e]
        if edge_labels is not None and e in edge_labels:
            lines.append(f'  {u} -- {v} [label="{edge_labels[e]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(G) -> str:
    """Deterministic JSON export: {"vertices", "labels", "edges"}."""
    if isinstance(G, Multigraph):
        order = sorted(range(G.edge_count), key=lambda e: (*G.edges[e], e))
    else:
        order = range(G.edge_count)
    payload = {
        "vertices": G.vertex_count,
        "labels": list(G.labels) if G.labels is not None else None,
        "edges": [{"id": e, "u": G.edges[e][0], "v": G.edges[e][1]} for e in order],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> Multigraph:
    """Parse the to_json format back into a Multigraph."""
    try:
        payload = json.loads(text)
        n = payload["vertices"]
        records = payload["edges"]
        labels = payload.get("labels")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    edges = [None] * len(records)
    for rec in records:
        e, u, v = rec["id"], rec["u"], rec["v"]
        if not (0 <= e < len(records)) or edges[e] is not None:
            raise ValueError(f"bad or duplicate edge id {e}")
        edges[e] = (u, v)
    return Multigraph(n, edges, labels=labels)


def export(G, fmt: str) -> bytes:
    """Serialize a graph to DOT or JSON bytes."""
    if fmt == "dot":
        return to_dot(G).encode()
    if fmt == "json":
        return to_json(G).encode()
    raise ValueError(f"unknown format {fmt!r}; expected 'dot' or 'json'")
