import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from sfrobust.attack import (
    AttackStrategy,
    critical_fraction_targeted,
    random_failure_empirical,
    removal_order,
    run_attack,
)
from sfrobust.generators import BAParams, generate_ba
from sfrobust.graph import Graph, GraphError, degree_stats

DEGREE = AttackStrategy("degree")


def test_star_hub_goes_first():
    tr = run_attack(Graph.star(5), DEGREE, sample_interval=1)
    assert tr.removed[0] == 0
    assert [s.S for s in tr.samples] == [1.0, 0.25]
    assert tr.critical_fraction.value == pytest.approx(1 / 5)


@pytest.mark.parametrize("kind", ["degree", "betweenness", "random"])
def test_complete_graph_stays_connected(kind):
    tr = run_attack(Graph.complete(4), AttackStrategy(kind, seed=1), 1, until_collapse=False)
    assert all(s.S == 1.0 for s in tr.samples)
    assert tr.samples[-1].fraction_removed == pytest.approx(3 / 4)
    # K4 -> K3 (kappa 2) -> K2 (kappa 1)
    assert tr.critical_fraction.value == pytest.approx(2 / 4)


def test_trace_fractions_increase_and_stop_at_collapse():
    g = generate_ba(BAParams(2, 200, seed=1))
    tr = run_attack(g, DEGREE, sample_interval=5)
    fr = [s.fraction_removed for s in tr.samples]
    assert fr[0] == 0.0
    assert all(a < b for a, b in zip(fr, fr[1:]))
    assert fr[-1] == tr.critical_fraction.value
    assert all(s.S >= 0 and s.E >= 0 for s in tr.samples)


def test_attack_leaves_input_untouched():
    g = generate_ba(BAParams(3, 100, seed=2))
    before = list(g.edges())
    run_attack(g, DEGREE, until_collapse=False)
    run_attack(g, AttackStrategy("random", seed=3), until_collapse=False)
    critical_fraction_targeted(g)
    assert list(g.edges()) == before and g.alive_count == 100


def test_attack_needs_two_nodes():
    with pytest.raises(GraphError):
        run_attack(Graph(1), DEGREE)
    with pytest.raises(ValueError):
        AttackStrategy("random")
    with pytest.raises(ValueError):
        AttackStrategy("pagerank")


@given(st.integers(0, 2**32 - 1), st.sampled_from(["degree", "betweenness", "random"]), st.booleans())
@settings(max_examples=40, deadline=None)
def test_largest_component_size_never_grows(seed, kind, recompute):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(2, 25)), float(rng.uniform(0.05, 0.5)))
    tr = run_attack(g, AttackStrategy(kind, recompute, seed), 1, until_collapse=False, with_efficiency=False)
    sizes = [s.size for s in tr.samples]
    assert all(a >= b for a, b in zip(sizes, sizes[1:]))


def test_degree_attack_always_takes_a_current_maximum():
    g = generate_ba(BAParams(3, 300, seed=9))
    order = run_attack(g, DEGREE, until_collapse=False, with_efficiency=False).removed
    h = g.copy()
    for u in order:
        best = max(h.degree(w) for w in h.nodes())
        assert h.degree(u) == best
        assert u == min(w for w in h.nodes() if h.degree(w) == best)
        h.remove_node(u)


def test_initial_order_mode_uses_starting_degrees():
    g = generate_ba(BAParams(2, 80, seed=4))
    order = run_attack(g, AttackStrategy("degree", recompute=False), until_collapse=False).removed
    assert order == sorted(g.nodes(), key=lambda u: (-g.degree(u), u))[: len(order)]


def test_betweenness_attack_takes_the_centre_of_a_path():
    tr = run_attack(Graph.path(5), AttackStrategy("betweenness"), 1, until_collapse=False)
    assert tr.removed[0] == 2


def test_kappa_bookkeeping_matches_recount():
    g = generate_ba(BAParams(3, 150, seed=6))
    h = g.copy()
    order = removal_order(h, DEGREE)
    t = critical_fraction_targeted(g).value * 150
    for step, u in enumerate(order, start=1):
        h.remove_node(u)
        collapsed = h.edge_count == 0 or degree_stats(h).kappa < 2
        if collapsed:
            assert step == round(t)
            break
        assert step < t


def test_critical_fraction_targeted_examples():
    for n in (5, 8, 20):
        assert critical_fraction_targeted(Graph.star(n)).value == pytest.approx(1 / n)
        assert critical_fraction_targeted(Graph.cycle(n)).value == pytest.approx(1 / n)
    # path P3 has kappa 1.5: already collapsed
    c = critical_fraction_targeted(Graph.path(3))
    assert c.value == 0 and c.subcritical


def test_size_criterion():
    g = generate_ba(BAParams(3, 400, seed=8))
    tr = run_attack(g, DEGREE, criterion="size", with_efficiency=False)
    last = tr.samples[-1]
    assert last.size < 0.01 * 400
    assert tr.samples[-2].size >= 0.01 * 400 or len(tr.samples) == 2


def test_random_failure_examples():
    assert abs(random_failure_empirical(Graph.complete(10), seed=1, trials=100).value - 0.875) <= 0.1
    assert random_failure_empirical(Graph(2, [(0, 1)]), seed=1, trials=10).value == 0.5
    assert random_failure_empirical(Graph.cycle(12), seed=1, trials=10).value == pytest.approx(1 / 12)


def test_random_failure_is_seeded():
    g = generate_ba(BAParams(3, 200, seed=1))
    a = random_failure_empirical(g, seed=5, trials=5)
    b = random_failure_empirical(g, seed=5, trials=5)
    assert a == b


def test_attack_hurts_more_than_failure():
    g = generate_ba(BAParams(3, 500, seed=12))
    f_t = critical_fraction_targeted(g).value
    f_rand = random_failure_empirical(g, seed=3, trials=30).value
    assert f_t <= f_rand
