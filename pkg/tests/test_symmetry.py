import random

import pytest

from token_covers.graphs import (
    SimpleGraph,
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
)
from token_covers.symmetry import (
    automorphisms,
    edge_orbits,
    free_cyclic_actions,
    is_automorphism,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
    vertex_orbits,
    zz_check,
)
from token_covers.tokens import token_graph

from helpers import (
    brute_force_automorphisms,
    brute_force_isomorphism,
    disjoint_union,
    kneser,
    random_simple_graph,
    relabel,
)


def test_aut_order_k4():
    assert automorphisms(complete(4)).order() == (24, True)


def test_aut_order_k23():
    assert automorphisms(complete_bipartite(2, 3)).order() == (12, True)


def test_aut_order_c6_vs_brute_force():
    oracle = len(brute_force_automorphisms(cycle(6)))
    assert oracle == 12
    assert automorphisms(cycle(6)).order() == (12, True)


def test_generators_are_automorphisms():
    for g in (cycle(7), token_graph(star(4), 2), complete_bipartite(3, 4)):
        aut = automorphisms(g)
        assert all(is_automorphism(g, p) for p in aut.generators)
        assert all(not p.is_identity for p in aut.generators)


def test_automorphisms_deterministic():
    a = automorphisms(token_graph(complete(5), 2)).generators
    b = automorphisms(token_graph(complete(5), 2)).generators
    assert a == b


def test_aut_oversize_rejected():
    with pytest.raises(ValueError):
        automorphisms(complete(10), max_vertices=5)


def test_edge_transitive_families():
    assert is_edge_transitive(complete_bipartite(3, 5))
    assert is_edge_transitive(complete(6))
    assert is_edge_transitive(token_graph(complete(6), 2))
    assert not is_edge_transitive(path(4))
    assert len(edge_orbits(path(4))) == 2


def test_vertex_orbits_bipartition():
    orbits = vertex_orbits(complete_bipartite(3, 5))
    assert orbits == [[0, 1, 2], [3, 4, 5, 6, 7]]
    assert not is_vertex_transitive(complete_bipartite(3, 5))
    assert is_vertex_transitive(complete_bipartite(4, 4))


def test_token_star_orbits():
    F = token_graph(star(4), 2)
    assert not is_vertex_transitive(F)
    assert sorted(len(o) for o in vertex_orbits(F)) == [4, 6]


def test_two_orbit_rule_for_edge_transitive_not_vertex_transitive():
    for g in (complete_bipartite(2, 3), star(5), token_graph(star(4), 2)):
        assert is_edge_transitive(g)
        assert not is_vertex_transitive(g)
        assert len(vertex_orbits(g)) == 2


def test_isomorphic_petersen_complement():
    assert is_isomorphic(token_graph(complete(5), 2), kneser(5, 2)) is None
    witness = is_isomorphic(token_graph(complete(5), 2),
                            SimpleGraph(10, _complement_edges(kneser(5, 2))))
    assert witness is not None


def _complement_edges(g):
    n = g.vertex_count
    return [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]


def test_isomorphic_negative_degree_mismatch():
    assert is_isomorphic(cycle(6), complete_bipartite(3, 3)) is None


def test_isomorphic_matches_brute_force():
    rng = random.Random(7)
    pairs = [
        (cycle(6), complete_bipartite(3, 3)),
        (cycle(6), disjoint_union(cycle(3), cycle(3))),
        (path(4), star(3)),
        (complete(4), complete(4)),
        (token_graph(complete(4), 2), johnson_4_2_relabeled()),
    ]
    for _ in range(12):
        n = rng.randint(2, 8)
        a = random_simple_graph(rng, n, 0.5)
        images = list(range(n))
        rng.shuffle(images)
        pairs.append((a, relabel(a, images)))
        pairs.append((a, random_simple_graph(rng, n, 0.5)))
    for a, b in pairs:
        fast = is_isomorphic(a, b)
        slow = brute_force_isomorphism(a, b)
        assert (fast is None) == (slow is None)
        if fast is not None:
            mapped = {tuple(sorted((fast(u), fast(v)))) for u, v in a.edges}
            assert mapped == set(b.edges)


def johnson_4_2_relabeled():
    from token_covers.tokens import johnson

    g = johnson(4, 2)
    images = [3, 1, 4, 0, 5, 2]
    return relabel(g, images)


def test_free_actions_hexagon():
    found = free_cyclic_actions(cycle(6), 6)
    assert found.complete
    assert len(found.actions) == 2
    for g in found.actions:
        assert g.order() == 6
        assert all(len(c) == 6 for c in g.orbits())


def test_free_actions_star_empty():
    found = free_cyclic_actions(star(3), 2)
    assert found.complete and found.actions == ()


def test_free_actions_divisibility_short_circuit():
    assert free_cyclic_actions(cycle(6), 4).actions == ()


def test_free_actions_budget_exhaustion():
    found = free_cyclic_actions(cycle(6), 6, budget=3)
    assert not found.complete


def test_free_actions_rejects_trivial_order():
    with pytest.raises(ValueError):
        free_cyclic_actions(cycle(6), 1)


def test_zz_complete_instances():
    for k in (2, 3, 4):
        rep = zz_check("complete", (5,), k)
        assert rep.passed and rep.find("predicted_edge_transitive")


def test_zz_bipartite_instance():
    rep = zz_check("complete_bipartite", (2, 4), 3)
    assert rep.passed and rep.find("predicted_edge_transitive")


def test_zz_bipartite_negative_instances():
    # bipartite families away from the classified (2, k) and (n, n) cases
    rep = zz_check("complete_bipartite", (2, 3), 2)
    assert rep.passed and not rep.find("predicted_edge_transitive")
    rep = zz_check("complete_bipartite", (3, 5), 3)
    assert rep.passed and not rep.find("computed_edge_transitive")


def test_zz_negative_controls():
    rep = zz_check("path", (4,), 2)
    assert rep.passed and not rep.find("predicted_edge_transitive")
    rep = zz_check("cycle", (5,), 2)
    assert rep.passed and not rep.find("computed_edge_transitive")


def test_zz_reduction_to_base_graph():
    # F_1 and F_{|V|-1} are the graph itself
    rep = zz_check("complete", (4,), 1)
    assert rep.passed and rep.find("predicted_edge_transitive")
    rep = zz_check("path", (4,), 3)
    assert rep.passed and not rep.find("predicted_edge_transitive")


def test_zz_small_cycle_coincidences():
    # C_4 = K_{2,2}: its 2-token graph is edge-transitive
    rep = zz_check("cycle", (4,), 2)
    assert rep.passed and rep.find("predicted_edge_transitive")
    rep = zz_check("path", (3,), 2)
    assert rep.passed and rep.find("predicted_edge_transitive")


def test_zz_bad_k():
    with pytest.raises(ValueError):
        zz_check("complete", (4,), 5)
