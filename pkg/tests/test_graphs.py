import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from token_covers.graphs import (
    Multigraph,
    SimpleGraph,
    as_simple,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    export,
    from_json,
    is_biregular,
    make_family,
    path,
    srg_parameters,
    star,
    to_dot,
    to_json,
    underlying_simple,
)
from token_covers.tokens import token_graph

from helpers import disjoint_union


def test_complete_4():
    g = complete(4)
    assert g.edge_count == 6
    assert g.degrees() == [3, 3, 3, 3]


def test_star_5():
    g = star(5)
    assert g.vertex_count == 6
    assert g.edge_count == 5
    assert g.degrees() == [5, 1, 1, 1, 1, 1]


def test_complete_bipartite_2_4():
    g = complete_bipartite(2, 4)
    assert g.edge_count == 8
    assert sorted(g.degrees()) == [2, 2, 2, 2, 4, 4]


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_edge_formula(n):
    assert complete(n).edge_count == n * (n - 1) // 2


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 3), (4, 2)])
def test_bipartite_edge_formula(m, n):
    assert complete_bipartite(m, n).edge_count == m * n


def test_family_dispatch_and_errors():
    assert make_family("cycle", 5) == cycle(5)
    assert make_family("complete_bipartite", 2, 3) == complete_bipartite(2, 3)
    with pytest.raises(ValueError):
        make_family("complete", 0)
    with pytest.raises(ValueError):
        make_family("torus", 3)
    with pytest.raises(ValueError):
        make_family("complete", 3, 3)
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        star(0)


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        SimpleGraph(2, [(0, 2)])


def test_multigraph_darts():
    g = Multigraph(2, [(0, 1), (1, 1)])
    assert g.dart_count == 4
    assert g.dart_endpoints(0) == (0, 1)
    assert g.dart_endpoints(1) == (1, 0)
    assert g.reverse_dart(2) == 3
    assert g.reverse_dart(3) == 2
    # loop darts share the edge and are mutually reversed
    assert g.dart_endpoints(2) == g.dart_endpoints(3) == (1, 1)
    assert g.degree(1) == 3  # loop counts twice
    assert g.loop_count() == 1


@given(st.integers(1, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_multigraph_degree_sum(n, data):
    edges = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    g = Multigraph(n, edges)
    assert sum(g.degree(v) for v in range(n)) == 2 * g.edge_count


def test_underlying_simple_examples():
    lonely_loop = Multigraph(2, [(1, 1)])
    assert underlying_simple(lonely_loop).edge_count == 0
    doubled = Multigraph(2, [(0, 1), (0, 1)])
    assert underlying_simple(doubled).edges == ((0, 1),)


@given(st.integers(1, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_underlying_simple_idempotent(n, data):
    edges = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    g = Multigraph(n, edges)
    once = underlying_simple(g)
    again = underlying_simple(Multigraph(n, once.edges))
    assert once == again


@given(st.integers(1, 6), st.data())
@settings(max_examples=60, deadline=None)
def test_json_round_trip_multigraph(n, data):
    edges = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    g = Multigraph(n, edges, labels=[f"v{v}" for v in range(n)])
    back = from_json(to_json(g))
    assert back == g
    assert back.labels == g.labels


def test_json_round_trip_simple():
    g = token_graph(star(3), 2)
    back = as_simple(from_json(to_json(g)))
    assert back == g
    assert back.labels == g.labels


def test_dot_single_vertex():
    text = to_dot(SimpleGraph(1))
    lines = text.strip().splitlines()
    assert lines[0].startswith("graph")
    assert len(lines) == 3  # header, one node, closer


def test_json_cycle3():
    payload = json.loads(to_json(cycle(3)))
    assert payload["vertices"] == 3
    assert len(payload["edges"]) == 3


def test_export_bytes_and_errors():
    assert export(cycle(3), "dot").startswith(b"graph")
    assert json.loads(export(cycle(3), "json"))["vertices"] == 3
    with pytest.raises(ValueError):
        export(cycle(3), "gml")
    with pytest.raises(ValueError):
        from_json('{"vertices": 2}')
    with pytest.raises(ValueError):
        from_json('{"vertices": 1, "labels": null, "edges": [{"id": 5, "u": 0, "v": 0}]}')


def test_export_deterministic():
    g = token_graph(complete(5), 2)
    assert to_json(g) == to_json(token_graph(complete(5), 2))
    assert to_dot(g) == to_dot(token_graph(complete(5), 2))


def test_connected_components():
    g = disjoint_union(cycle(3), path(2))
    assert connected_components(g) == [[0, 1, 2], [3, 4]]


def test_biregular_star():
    assert is_biregular(star(5)) == (5, 1)


def test_biregular_odd_cycle_absent():
    assert is_biregular(cycle(5)) is None


def test_biregular_even_cycle():
    assert is_biregular(cycle(4)) == (2, 2)


def test_biregular_token_star():
    # parts of F_2(K_{1,4}): the four center+leaf tokens have degree 3 and
    # include vertex 0 = {0,1}; the six leaf-pair tokens have degree 2
    g = token_graph(star(4), 2)
    part_of_zero = {0}
    frontier = {0}
    side = {0: 0}
    while frontier:
        nxt = set()
        for v in frontier:
            for w in g.neighbors(v):
                if w not in side:
                    side[w] = side[v] ^ 1
                    nxt.add(w)
        frontier = nxt
    deg0 = {g.degree(v) for v, s in side.items() if s == 0}
    deg1 = {g.degree(v) for v, s in side.items() if s == 1}
    assert deg0 == {3} and deg1 == {2}
    assert is_biregular(g) == (3, 2)


def test_biregular_disconnected():
    assert is_biregular(disjoint_union(star(3), star(3))) == (3, 1)
    assert is_biregular(disjoint_union(star(3), path(2))) is None
    assert is_biregular(disjoint_union(star(3), star(5))) is None
    assert is_biregular(SimpleGraph(3)) == (0, 0)
    # an isolated vertex forces a degree-0 side
    assert is_biregular(disjoint_union(star(3), SimpleGraph(1))) is None
    assert is_biregular(disjoint_union(path(2), SimpleGraph(1))) is None


def test_biregular_not_bipartite_component():
    assert is_biregular(disjoint_union(cycle(3), path(2))) is None


def test_srg_token_complete():
    assert srg_parameters(token_graph(complete(5), 2)) == (10, 6, 3, 4)
    assert srg_parameters(token_graph(complete(6), 2)) == (15, 8, 4, 4)


def test_srg_absent():
    assert srg_parameters(path(4)) is None  # not regular
    assert srg_parameters(complete(4)) is None  # no non-adjacent pairs
    assert srg_parameters(cycle(6)) is None  # common neighbors not constant


def test_srg_pentagon():
    assert srg_parameters(cycle(5)) == (5, 2, 0, 1)
