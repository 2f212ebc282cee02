"""Checker unit tests: named examples plus oracle spot checks.

The heavyweight oracle-equivalence runs (exhaustive n=5, 500 random
graphs, density subsets) live in test_acceptance.py; here each checker
gets its stated examples, witness re-validation, and smaller randomized
agreement checks.
"""

import itertools
import math
import random
from fractions import Fraction

import pytest

from oracles import (
    brute_chromatic_number,
    brute_clique_number,
    brute_contains_kr,
    brute_count_kr,
    brute_max_density,
    brute_vertex_connectivity,
    random_graph,
)
from sprinkle import (
    SeedSpec,
    build_graph,
    chromatic_number,
    clique_number,
    complete_graph,
    complete_multipartite,
    contains_kr,
    count_kr,
    cycle_graph,
    diameter,
    diameter_at_most,
    disjoint_cliques,
    gnm,
    induced_subgraph,
    is_k_connected,
    max_clique,
    max_subgraph_density,
    minimum_coloring,
    non_edges,
    two_cliques,
    vertex_connectivity,
)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def _assert_clique(g, vertices):
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------

def test_clique_number_examples():
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(complete_multipartite([3, 3, 3])) == 3
    assert clique_number(petersen()) == 2 == brute_clique_number(petersen())


def test_max_clique_witness_is_clique():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        w = max_clique(g)
        _assert_clique(g, w)
        assert len(w) == brute_clique_number(g)


def test_contains_kr_examples():
    assert not contains_kr(cycle_graph(5), 3).holds
    v = contains_kr(complete_multipartite([2, 2, 2]), 3)
    assert v.holds
    _assert_clique(complete_multipartite([2, 2, 2]), v.witness)


def test_contains_kr_bipartite_plus_partfree_edges():
    # K_{10,10} plus cross-part-only additions keeps cliques at
    # r0 * (ceil(r/r0) - 1) = 4 < 5 as long as neither part holds a triangle
    g = complete_multipartite([10, 10])
    extra = [(0, 1), (2, 3), (10, 11), (12, 13)]  # within-part matchings, no triangles
    g2 = g.with_edges(extra)
    assert contains_kr(g2, 4).holds
    assert not contains_kr(g2, 5).holds
    assert clique_number(g2) == 4


def test_contains_kr_agrees_with_brute():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        for r in range(1, 6):
            assert contains_kr(g, r).holds == brute_contains_kr(g, r)


def test_count_kr_examples():
    assert count_kr(complete_graph(5), 3) == 10
    assert count_kr(cycle_graph(5), 3) == 0
    assert count_kr(complete_multipartite([2, 2, 2]), 3) == 8


def test_count_kr_agrees_with_brute():
    rng = random.Random(13)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        for r in range(1, 5):
            assert count_kr(g, r) == brute_count_kr(g, r)


# ---------------------------------------------------------------------------
# diameter
# ---------------------------------------------------------------------------

def test_diameter_examples():
    assert diameter(complete_graph(2)) == 1
    assert diameter(complete_graph(7)) == 1
    assert diameter(two_cliques(10)) == math.inf
    assert diameter(cycle_graph(6)) == 3
    assert diameter(build_graph(1, [])) == 0


def test_diameter_matches_apsp_oracle():
    # 300 random graphs up to n=64, against scipy shortest paths
    import numpy as np
    from scipy.sparse.csgraph import shortest_path

    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(2, 64)
        g = random_graph(rng, n, rng.uniform(0.02, 0.6))
        mat = np.zeros((n, n), dtype=bool)
        for u, v in g.edges():
            mat[u, v] = mat[v, u] = True
        dist = shortest_path(mat, method="D", unweighted=True)
        want = dist.max()
        want = math.inf if math.isinf(want) else int(want)
        assert diameter(g) == want


def test_diameter_at_most_consistent_with_diameter():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        d = diameter(g)
        for t in range(0, 6):
            assert diameter_at_most(g, t).holds == (d <= t)


def test_diameter_at_most_witness_pair():
    g = two_cliques(8)
    v = diameter_at_most(g, 3)
    assert not v.holds
    a, b = v.witness
    assert (a < 4) != (b < 4)  # antipodal pair straddles the cliques


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def test_is_k_connected_examples():
    k5 = complete_graph(5)
    assert is_k_connected(k5, 4).holds
    assert not is_k_connected(k5, 5).holds
    c6 = cycle_graph(6)
    assert is_k_connected(c6, 2).holds
    v = is_k_connected(c6, 3)
    assert not v.holds and len(v.witness) == 2


def test_is_k_connected_derived_example():
    # four disjoint K_3s on 12 vertices joined by one edge per clique
    # pair: still not 2-connected; verified against brute-force kappa
    h = disjoint_cliques(12, 4)
    bridges = [(0, 4), (0, 8), (4, 8)]
    g = h.with_edges(bridges)
    v = is_k_connected(g, 2)
    assert not v.holds
    assert brute_vertex_connectivity(g) < 2
    _assert_separator(g, v.witness)


def _assert_separator(g, sep):
    assert isinstance(sep, frozenset)
    alive = [v for v in range(g.n) if v not in sep]
    if not alive:
        return
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in sep and w not in seen:
                seen.add(w)
                stack.append(w)
    assert len(seen) < len(alive), "witness does not separate"


def test_is_k_connected_exhaustive_n5():
    # every labeled graph on 5 vertices, every threshold, against the
    # separator-enumeration oracle
    from oracles import graph_from_int

    for code in range(1 << 10):
        g = graph_from_int(5, code)
        kappa = brute_vertex_connectivity(g)
        for k in range(0, 6):
            want = True if k == 0 else (g.n > k and kappa >= k)
            assert is_k_connected(g, k).holds == want


def test_is_k_connected_witnesses_on_random_graphs():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        kappa = brute_vertex_connectivity(g)
        for k in range(0, n + 1):
            v = is_k_connected(g, k)
            want = (g.n >= 1) if k == 0 else (n > k and kappa >= k)
            assert v.holds == want, (g.edges(), k, kappa)
            if not v.holds and isinstance(v.witness, frozenset) and n > k:
                assert len(v.witness) < k
                _assert_separator(g, v.witness)


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete_graph(7)) == 6
    assert vertex_connectivity(two_cliques(8)) == 0
    assert vertex_connectivity(petersen()) == 3 == brute_vertex_connectivity(petersen())
    with pytest.raises(ValueError):
        vertex_connectivity(build_graph(1, []))


def test_k0_and_disconnected_conventions():
    g = two_cliques(6)
    assert is_k_connected(g, 0).holds
    v = is_k_connected(g, 1)
    assert not v.holds and v.witness == frozenset()


# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------

def test_chromatic_examples():
    assert chromatic_number(complete_graph(5)) == 5
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(petersen()) == 3


def test_chromatic_cap_rejection():
    g = gnm(41, 100, SeedSpec(0))
    with pytest.raises(ValueError, match="clique"):
        chromatic_number(g, cap=40)


def test_minimum_coloring_proper_and_optimal():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        colors = minimum_coloring(g)
        assert all(colors[u] != colors[v] for u, v in g.edges())
        assert max(colors) + 1 == brute_chromatic_number(g)


def test_clique_lower_bound_for_coloring():
    rng = random.Random(41)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 9), rng.random())
        if contains_kr(g, 4).holds:
            assert chromatic_number(g) >= 4
        assert clique_number(g) <= chromatic_number(g)


# ---------------------------------------------------------------------------
# density
# ---------------------------------------------------------------------------

def test_density_examples():
    for r in range(3, 9):
        assert max_subgraph_density(complete_graph(r)).value == Fraction(r - 1, 2)
    assert max_subgraph_density(build_graph(2, [(0, 1)])).value == Fraction(1, 2)
    k4_pendant = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    dm = max_subgraph_density(k4_pendant)
    assert dm.value == Fraction(3, 2)
    assert dm.witness_set == (0, 1, 2, 3)
    assert dm.value == brute_max_density(k4_pendant)


def test_density_witness_attains_value():
    rng = random.Random(61)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 11), rng.random())
        dm = max_subgraph_density(g)
        sub = induced_subgraph(g, dm.witness_set)
        assert Fraction(sub.edge_count, sub.n) == dm.value
        assert dm.value == brute_max_density(g)


# ---------------------------------------------------------------------------
# monotonicity of the studied properties under edge addition
# ---------------------------------------------------------------------------

def test_single_edge_addition_monotonicity():
    rng = random.Random(71)
    for _ in range(40):
        n = rng.randint(3, 9)
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        pool = non_edges(g)
        if not pool:
            continue
        e = rng.choice(pool)
        g2 = g.with_edges([e])
        assert clique_number(g2) >= clique_number(g)
        assert vertex_connectivity(g2) >= vertex_connectivity(g)
        d = diameter(g)
        if d != math.inf:
            assert diameter(g2) <= d
