from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from oracles import betweenness_by_paths, efficiency_by_bfs
from sfrobust.graph import DegreeStats, Graph, GraphError, degree_stats
from sfrobust.metrics import betweenness, critical_fraction_random, efficiency


def test_efficiency_examples():
    assert efficiency(Graph.complete(3)) == 1.0
    # ordered pairs: four at distance 1, two at distance 2 -> (4 + 1) / 6
    assert efficiency(Graph.path(3)) == pytest.approx(5 / 6, abs=1e-12)
    assert efficiency(Graph(2)) == 0.0
    with pytest.raises(GraphError):
        efficiency(Graph(1))


def test_efficiency_ignores_removed_nodes():
    g = Graph.path(4)
    g.remove_node(3)
    assert efficiency(g) == pytest.approx(5 / 6, abs=1e-12)


@given(st.integers(0, 2**32 - 1), st.integers(2, 12), st.floats(0.0, 1.0))
@settings(max_examples=60, deadline=None)
def test_efficiency_matches_bfs_and_grows_with_edges(seed, n, p):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, n, p)
    e = efficiency(g)
    assert e == pytest.approx(efficiency_by_bfs(g), abs=1e-12)
    assert 0.0 <= e <= 1.0
    missing = [(u, v) for u, v in combinations(range(n), 2) if not g.has_edge(u, v)]
    if missing:
        assert e < 1.0
        g.add_edge(*missing[int(rng.integers(len(missing)))])
        assert efficiency(g) >= e - 1e-12
    else:
        assert e == pytest.approx(1.0)


def test_critical_fraction_random_examples():
    c = critical_fraction_random(degree_stats(Graph.cycle(100)))
    assert c.value == 0.0 and c.kind == "random"
    assert critical_fraction_random(degree_stats(Graph.complete(4))).value == 0.5
    # kappa = 1.5: raw formula gives -1, reported as 0 and flagged
    low = critical_fraction_random(DegreeStats(2.0, 3.0, 1.5))
    assert low.value == 0.0 and low.subcritical
    with pytest.raises(ValueError):
        critical_fraction_random(DegreeStats(1.0, 1.0, 1.0))


@given(st.floats(1.0001, 1e6), st.floats(1.0001, 1e6))
def test_critical_fraction_random_increases_with_kappa(a, b):
    lo, hi = sorted((a, b))
    if hi - lo < 1e-6 or lo <= 2:
        return
    f = lambda k: critical_fraction_random(DegreeStats(1.0, k, k)).value
    assert f(lo) < f(hi)
    assert 0.0 <= f(hi) < 1.0


def test_betweenness_examples():
    assert betweenness(Graph.path(3)) == [0.0, 1.0, 0.0]
    assert betweenness(Graph.star(5)) == [6.0, 0.0, 0.0, 0.0, 0.0]
    assert betweenness(Graph.complete(4)) == [0.0] * 4


def test_brandes_matches_path_enumeration():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 8))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.9)))
        if n > 2 and rng.random() < 0.3:
            g.remove_node(int(rng.integers(n)))
        np.testing.assert_allclose(betweenness(g), betweenness_by_paths(g), atol=1e-9, rtol=0)
