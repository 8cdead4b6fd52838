import itertools
import random

from irramsey.canon import automorphism_group_order, canonical_code, canonical_form, orbits, search_labeling
from irramsey.graph import Graph, complete_graph, cycle_graph, disjoint_union, petersen_graph

import oracles


def random_graph(n, rng, p=0.5):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def relabeled(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_invariance_under_relabeling():
    rng = random.Random(10)
    for _ in range(1000):
        g = random_graph(rng.randint(1, 9), rng, rng.random())
        assert canonical_code(g) == canonical_code(relabeled(g, rng))


def test_separates_cycle_from_two_triangles():
    assert canonical_code(cycle_graph(6)) != canonical_code(disjoint_union(complete_graph(3), complete_graph(3)))


def test_curated_nonisomorphic_pairs():
    pairs = [
        # same degree sequences, different graphs
        (cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))),
        (cycle_graph(8), disjoint_union(cycle_graph(4), cycle_graph(4))),
        (cycle_graph(9), disjoint_union(cycle_graph(4), cycle_graph(5))),
        # the two cubic graphs on 6 vertices
        (Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
         Graph.from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])),
    ]
    for g, h in pairs:
        assert canonical_code(g) != canonical_code(h)


def test_class_counts():
    # graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34 (recomputed by brute force below for n <= 4)
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n, want in expected.items():
        assert len({canonical_code(g) for g in oracles.all_graphs(n)}) == want


def test_class_count_four_by_brute_force():
    reps = []
    for g in oracles.all_graphs(4):
        if not any(oracles.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    assert len(reps) == 11


def test_code_equality_matches_isomorphism():
    rng = random.Random(11)
    graphs = [random_graph(6, rng, 0.5) for _ in range(40)]
    for g, h in itertools.combinations(graphs, 2):
        assert (canonical_code(g) == canonical_code(h)) == oracles.is_isomorphic(g, h)


def test_canonical_form_is_fixed_point():
    rng = random.Random(12)
    for _ in range(100):
        g = random_graph(rng.randint(1, 10), rng)
        f = canonical_form(g)
        assert canonical_form(relabeled(g, rng)) == f
        assert oracles.is_isomorphic(f, g) if g.order <= 7 else canonical_code(f) == canonical_code(g)


def test_automorphism_group_order():
    assert automorphism_group_order(petersen_graph()) == 120
    assert automorphism_group_order(cycle_graph(6)) == 12
    assert automorphism_group_order(complete_graph(5)) == 120
    rng = random.Random(13)
    for _ in range(40):
        g = random_graph(rng.randint(1, 6), rng)
        assert automorphism_group_order(g) == oracles.automorphisms(g)


def test_autos_are_automorphisms():
    rng = random.Random(14)
    for _ in range(100):
        g = random_graph(rng.randint(2, 12), rng, rng.choice([0.2, 0.5]))
        _, _, autos = search_labeling(g.adj, g.order)
        for a in autos:
            assert g.relabel(a) == g
        if not autos:
            assert automorphism_group_order(g) == 1


def test_orbits_of_cycle():
    g = cycle_graph(7)
    _, _, autos = search_labeling(g.adj, g.order)
    assert set(orbits(7, autos)) == {0}


def test_larger_orders():
    rng = random.Random(15)
    for n in (16, 20, 25):
        g = random_graph(n, rng, 0.3)
        assert canonical_code(g) == canonical_code(relabeled(g, rng))
