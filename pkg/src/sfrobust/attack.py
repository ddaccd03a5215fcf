"""Targeted attacks and random failures.

Collapse is detected with the Molloy-Reed style condition kappa < 2 on the
surviving graph, where kappa = <k^2>/<k>. The sums behind kappa are updated
incrementally, so detecting collapse costs O(degree) per removal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from .graph import Graph, GraphError, largest_component_size
from .metrics import CriticalFraction, betweenness, efficiency

KINDS = ("degree", "betweenness", "random")


@dataclass(frozen=True)
class AttackStrategy:
    kind: str = "degree"
    recompute: bool = True
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown attack kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random failure needs a seed")


class AttackSample(NamedTuple):
    fraction_removed: float
    S: float
    E: float
    size: int  # largest component size, unnormalised


@dataclass
class AttackTrace:
    samples: list[AttackSample]
    critical_fraction: CriticalFraction | None
    removed: list[int] = field(default_factory=list)


def _degree_order(h: Graph, recompute: bool) -> Iterator[int]:
    adj = h.adj
    if not recompute:
        yield from sorted(h.nodes(), key=lambda u: (-len(adj[u]), u))
        return
    heap = [(-len(adj[u]), u) for u in h.nodes()]
    heapq.heapify(heap)
    while heap:
        negd, u = heapq.heappop(heap)
        if not h.alive[u]:
            continue
        d = len(adj[u])
        if d != -negd:
            # degrees only fall, so this entry is stale
            heapq.heappush(heap, (-d, u))
            continue
        yield u


def _argmax_lowest_id(values: list[float], h: Graph) -> int:
    alive = [u for u in h.nodes()]
    top = max(values[u] for u in alive)
    tol = 1e-9 * max(1.0, abs(top))
    return next(u for u in alive if values[u] >= top - tol)


def _betweenness_order(h: Graph, recompute: bool) -> Iterator[int]:
    if not recompute:
        b = betweenness(h)
        yield from sorted(h.nodes(), key=lambda u: (-round(b[u], 9), u))
        return
    while h.alive_count:
        yield _argmax_lowest_id(betweenness(h), h)


def _random_order(h: Graph, seed) -> Iterator[int]:
    rng = np.random.default_rng(seed)
    nodes = np.fromiter(h.nodes(), dtype=np.int64)
    yield from (int(u) for u in rng.permutation(nodes))


def removal_order(h: Graph, strategy: AttackStrategy) -> Iterator[int]:
    """Lazily yield the next node to remove from ``h``.

    The caller removes each yielded node from ``h`` before asking for the
    next one; recomputing strategies read the current state of ``h``.
    """
    if strategy.kind == "degree":
        return _degree_order(h, strategy.recompute)
    if strategy.kind == "betweenness":
        return _betweenness_order(h, strategy.recompute)
    return _random_order(h, strategy.seed)


class _KappaTracker:
    """Running sums of k and k^2 over alive nodes."""

    def __init__(self, h: Graph):
        degs = [len(h.adj[u]) for u in h.nodes()]
        self.s1 = sum(degs)
        self.s2 = sum(k * k for k in degs)

    def before_remove(self, h: Graph, u: int) -> None:
        k = len(h.adj[u])
        self.s1 -= 2 * k
        self.s2 -= k * k
        for w in h.adj[u]:
            self.s2 -= 2 * len(h.adj[w]) - 1

    def collapsed(self) -> bool:
        return self.s1 == 0 or self.s2 < 2 * self.s1


def run_attack(
    g: Graph,
    strategy: AttackStrategy,
    sample_interval: int | None = None,
    *,
    until_collapse: bool = True,
    criterion: str = "kappa",
    with_efficiency: bool = True,
) -> AttackTrace:
    """Remove nodes one at a time and record S and E along the way.

    Samples are taken before any removal, every ``sample_interval`` removals
    and at the final step. The run stops at collapse (unless
    ``until_collapse`` is False) or when at most one node is left.
    ``criterion`` is ``"kappa"`` (kappa < 2) or ``"size"`` (largest component
    below 1% of the original node count).
    """
    if g.alive_count < 2:
        raise GraphError("attack needs at least 2 alive nodes")
    if criterion not in ("kappa", "size"):
        raise ValueError(f"unknown collapse criterion {criterion!r}")
    n0 = g.alive_count
    if sample_interval is None:
        sample_interval = max(1, n0 // 100)
    if sample_interval < 1:
        raise ValueError("sample_interval must be positive")
    h = g.copy()
    tracker = _KappaTracker(h)

    def sample(t: int) -> AttackSample:
        size = largest_component_size(h)
        e = efficiency(h) if with_efficiency and h.alive_count >= 2 else 0.0
        return AttackSample(t / n0, size / h.alive_count, e, size)

    def is_collapsed() -> bool:
        if criterion == "kappa":
            return tracker.collapsed()
        return largest_component_size(h) < 0.01 * n0

    kind = "random" if strategy.kind == "random" else "targeted"
    samples = [sample(0)]
    removed: list[int] = []
    critical = None
    if is_collapsed():
        critical = CriticalFraction(0.0, kind, subcritical=True)
        if until_collapse:
            return AttackTrace(samples, critical, removed)
    last = 0
    for u in removal_order(h, strategy):
        tracker.before_remove(h, u)
        h.remove_node(u)
        removed.append(u)
        t = len(removed)
        hit = critical is None and is_collapsed()
        if hit:
            critical = CriticalFraction(t / n0, kind)
        done = h.alive_count <= 1 or (hit and until_collapse)
        if t % sample_interval == 0 or done:
            samples.append(sample(t))
            last = t
        if done:
            break
    if last != len(removed):
        samples.append(sample(len(removed)))
    return AttackTrace(samples, critical, removed)


def removals_to_collapse(g: Graph, strategy: AttackStrategy, *, check_initial: bool = True) -> int:
    """Number of removals after which kappa of the survivors first drops below 2."""
    h = g.copy()
    tracker = _KappaTracker(h)
    if check_initial and tracker.collapsed():
        return 0
    t = 0
    for u in removal_order(h, strategy):
        tracker.before_remove(h, u)
        h.remove_node(u)
        t += 1
        if tracker.collapsed():
            return t
    return t


def critical_fraction_targeted(
    g: Graph, strategy: AttackStrategy = AttackStrategy()
) -> CriticalFraction:
    """f_t: fraction of the original nodes removed when kappa first falls below 2."""
    if g.alive_count == 0:
        raise GraphError("no alive nodes")
    t = removals_to_collapse(g, strategy)
    kind = "random" if strategy.kind == "random" else "targeted"
    return CriticalFraction(t / g.alive_count, kind, subcritical=(t == 0))


def random_failure_empirical(g: Graph, seed, trials: int = 100) -> CriticalFraction:
    """Mean collapse fraction under uniformly random removal order.

    The initial state is not tested, so every trial removes at least one node.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if g.alive_count == 0:
        raise GraphError("no alive nodes")
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    seeds = seed.spawn(trials)
    n0 = g.alive_count
    total = 0.0
    for ss in seeds:
        s = AttackStrategy("random", seed=ss)
        total += removals_to_collapse(g, s, check_initial=False) / n0
    return CriticalFraction(total / trials, "random")
