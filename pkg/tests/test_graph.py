import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from sfrobust.graph import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    NodeError,
    SelfLoopError,
    bfs_distances,
    degree_stats,
    largest_component_fraction,
)


def test_add_edge_updates_degrees():
    g = Graph(2)
    g.add_edge(0, 1)
    assert g.degree(0) == g.degree(1) == 1
    assert g.edge_count == 1


def test_add_edge_errors_are_distinct():
    g = Graph(3)
    with pytest.raises(SelfLoopError):
        g.add_edge(0, 0)
    g.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 0)
    with pytest.raises(NodeError):
        g.add_edge(0, 7)
    g.remove_node(2)
    with pytest.raises(NodeError):
        g.add_edge(0, 2)


def test_remove_node_triangle():
    g = Graph.complete(3)
    g.remove_node(0)
    assert list(g.edges()) == [(1, 2)]
    assert g.alive_count == 2


def test_remove_hub_of_star():
    g = Graph.star(5)
    g.remove_node(0)
    assert g.edge_count == 0
    assert g.degrees() == [0, 0, 0, 0, 0]
    assert largest_component_fraction(g) == 0.25


def test_remove_middle_of_path():
    g = Graph.path(3)
    g.remove_node(1)
    assert g.edge_count == 0 and g.alive_count == 2
    with pytest.raises(NodeError):
        g.remove_node(1)
    with pytest.raises(NodeError):
        g.remove_node(3)


def test_largest_component_fraction():
    assert largest_component_fraction(Graph.cycle(6)) == 1.0
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert largest_component_fraction(two_triangles) == 0.5
    g = Graph(1)
    g.remove_node(0)
    with pytest.raises(GraphError):
        largest_component_fraction(g)


@pytest.mark.parametrize(
    "g, mean, second, kappa",
    [
        (Graph.cycle(10), 2.0, 4.0, 2.0),
        (Graph.complete(4), 3.0, 9.0, 3.0),
        # degrees (4, 1, 1, 1, 1): sum 8, sum of squares 20
        (Graph.star(5), 8 / 5, 4.0, 2.5),
    ],
)
def test_degree_stats(g, mean, second, kappa):
    s = degree_stats(g)
    assert s.mean_degree == pytest.approx(mean)
    assert s.second_moment == pytest.approx(second)
    assert s.kappa == pytest.approx(kappa)


def test_degree_stats_needs_an_edge():
    with pytest.raises(GraphError):
        degree_stats(Graph(3))


def test_bfs_distances():
    assert bfs_distances(Graph.path(3), 0) == [0, 1, 2]
    assert bfs_distances(Graph(4, [(0, 1), (2, 3)]), 0) == [0, 1, -1, -1]
    assert bfs_distances(Graph.complete(4), 0) == [0, 1, 1, 1]
    g = Graph.path(3)
    g.remove_node(0)
    with pytest.raises(NodeError):
        bfs_distances(g, 0)


def test_copy_is_independent():
    g = Graph.path(4)
    h = g.copy()
    h.remove_node(1)
    h.add_edge(0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def check_invariants(g: Graph):
    for u, nbrs in enumerate(g.adj):
        assert u not in nbrs
        for w in nbrs:
            assert u in g.adj[w]
            assert g.alive[w] and g.alive[u]
    assert sum(g.degrees()) == 2 * g.edge_count
    assert g.alive_count == sum(g.alive)


ops = st.lists(
    st.tuples(st.sampled_from(["add", "remove"]), st.integers(0, 11), st.integers(0, 11)),
    max_size=80,
)


@given(ops)
@settings(max_examples=200, deadline=None)
def test_random_op_sequences_keep_invariants(seq):
    g = Graph(12)
    for op, u, v in seq:
        try:
            if op == "add":
                g.add_edge(u, v)
            else:
                g.remove_node(u)
        except GraphError:
            pass
        check_invariants(g)


@given(st.integers(0, 2**32 - 1), st.integers(2, 14), st.floats(0.05, 0.6))
@settings(max_examples=100, deadline=None)
def test_connected_iff_bfs_reaches_everything(seed, n, p):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, n, p)
    for u in rng.choice(n, size=int(rng.integers(0, n - 1)), replace=False):
        g.remove_node(int(u))
    alive = list(g.nodes())
    src = alive[int(rng.integers(len(alive)))]
    reach = bfs_distances(g, src)
    all_reached = all(reach[u] >= 0 for u in alive)
    assert (largest_component_fraction(g) == 1.0) == all_reached


@pytest.mark.parametrize("k,n", [(2, 9), (3, 8), (4, 10), (5, 12)])
def test_kappa_of_regular_graph_is_degree(k, n):
    # circulant graph: i ~ i +/- 1..k/2, plus the antipode for odd k
    edges = set()
    for i in range(n):
        for s in range(1, k // 2 + 1):
            edges.add(tuple(sorted((i, (i + s) % n))))
        if k % 2:
            edges.add(tuple(sorted((i, (i + n // 2) % n))))
    g = Graph(n, edges)
    assert set(g.degrees()) == {k}
    assert degree_stats(g).kappa == k
