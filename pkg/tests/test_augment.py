import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from sprinkle import (
    SeedSpec,
    augment_bernoulli,
    augment_uniform,
    build_graph,
    complete_graph,
    contains_kr,
    gnm,
    is_k_connected,
    non_edges,
    path_graph,
    split_budget,
)


def test_uniform_zero_on_complete():
    k4 = complete_graph(4)
    res = augment_uniform(k4, 0, SeedSpec(3))
    assert res.graph == k4 and res.added == () and res.base_edge_count == 6


def test_uniform_all_non_edges_forced():
    g = build_graph(3, [])
    res = augment_uniform(g, 3, SeedSpec(9))
    assert res.graph == complete_graph(3)
    assert sorted(res.added) == [(0, 1), (0, 2), (1, 2)]


def test_uniform_single_choice_always_taken():
    g = path_graph(3)
    for s in range(200):
        res = augment_uniform(g, 1, SeedSpec(s))
        assert res.added == ((0, 2),)


def test_uniform_rejects_oversize_m():
    g = path_graph(3)
    with pytest.raises(ValueError, match="maximum m=1"):
        augment_uniform(g, 2, SeedSpec(0))


def test_uniform_completion_invariant():
    g = gnm(8, 10, SeedSpec(2))
    res = augment_uniform(g, len(non_edges(g)), SeedSpec(5))
    assert res.graph == complete_graph(8)


def test_uniform_result_invariants():
    g = gnm(10, 20, SeedSpec(1))
    res = augment_uniform(g, 7, SeedSpec(2))
    base = set(g.edges())
    assert len(set(res.added)) == len(res.added) == 7
    assert not (set(res.added) & base)
    assert res.graph.edge_count == res.base_edge_count + 7


def test_uniform_determinism_and_seed_sensitivity():
    g = gnm(12, 20, SeedSpec(0))
    a = augment_uniform(g, 9, SeedSpec(4))
    b = augment_uniform(g, 9, SeedSpec(4))
    c = augment_uniform(g, 9, SeedSpec(5))
    assert a.added == b.added
    assert a.added != c.added


def test_uniform_choice_is_uniform_chi_squared():
    # path on 4 vertices has non-edges (0,2), (0,3), (1,3); over many
    # seeds the single pick must be uniform across the 3 choices
    # (chi-squared, df=2, 0.001 level -> critical value 13.816)
    g = path_graph(4)
    pool = non_edges(g)
    assert len(pool) == 3
    counts = Counter()
    trials = 40000
    master = SeedSpec(123)
    for i in range(trials):
        res = augment_uniform(g, 1, master.derive(i))
        counts[res.added[0]] += 1
    expected = trials / len(pool)
    chi2 = sum((counts[e] - expected) ** 2 / expected for e in pool)
    assert chi2 < 13.816, dict(counts)


def test_bernoulli_extremes():
    g = gnm(9, 12, SeedSpec(0))
    assert augment_bernoulli(g, 0.0, SeedSpec(1)).graph == g
    assert augment_bernoulli(g, 1.0, SeedSpec(1)).graph == complete_graph(9)
    with pytest.raises(ValueError):
        augment_bernoulli(g, 1.5, SeedSpec(1))
    with pytest.raises(ValueError):
        augment_bernoulli(g, -0.1, SeedSpec(1))


def test_bernoulli_mean_concentration():
    # empty graph on 50 vertices, p = 0.1: |R| ~ Binomial(1225, 0.1);
    # the mean over 2000 seeds must land within 3 sigma of 122.5 where
    # sigma = sqrt(1225 * 0.09 / 2000)
    g = build_graph(50, [])
    master = SeedSpec(77)
    trials = 2000
    total = sum(
        len(augment_bernoulli(g, 0.1, master.derive(i)).added) for i in range(trials)
    )
    mean = total / trials
    sigma = math.sqrt(1225 * 0.1 * 0.9 / trials)
    assert abs(mean - 122.5) <= 3 * sigma


def test_split_budget_examples():
    assert split_budget(10, 3) == [4, 3, 3]
    assert split_budget(0, 2) == [0, 0]
    assert split_budget(7, 7) == [1] * 7
    with pytest.raises(ValueError):
        split_budget(5, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 50))
def test_split_budget_balanced(m, phases):
    parts = split_budget(m, phases)
    assert sum(parts) == m and len(parts) == phases
    assert max(parts) - min(parts) <= 1
    assert all(p >= 0 for p in parts)


def test_monotone_coupling_distributional():
    # For H' a subgraph of H, augmenting both with the same m must give
    # P[property | H'] <= P[property | H] + 2 * CI width, for the
    # monotone properties "contains K_4" and "4-connected".
    master = SeedSpec(55)
    h = gnm(20, 70, master.derive(9999))
    hp = build_graph(20, h.edges()[:50])
    trials = 2000
    k4 = [0, 0]
    conn = [0, 0]
    for i in range(trials):
        ts = master.derive(1, i)
        ah = augment_uniform(h, 14, ts.stream(1))
        ap = augment_uniform(hp, 14, ts.stream(1))
        k4[0] += bool(contains_kr(ap.graph, 4))
        k4[1] += bool(contains_kr(ah.graph, 4))
        conn[0] += bool(is_k_connected(ap.graph, 4))
        conn[1] += bool(is_k_connected(ah.graph, 4))
    ci_width = 1.96 * math.sqrt(0.25 / trials)
    assert k4[0] / trials <= k4[1] / trials + 2 * ci_width
    assert conn[0] / trials <= conn[1] / trials + 2 * ci_width
