"""Robustness enhancement by adding links between non-adjacent node pairs.

A candidate link (u, v) has link degree k_u * k_v. Under enforcing parameter
alpha it is chosen with probability proportional to (k_u * k_v) ** alpha.
ERR, ELL and EHH are the alpha = 0, -inf and +inf limits: a uniform random
pair, the lowest-degree pair and the highest-degree pair.

Links are added one at a time and degrees are refreshed after every addition.

Zero-degree endpoints are handled as the limit of degree eps -> 0: for
alpha < 0 pairs with more zero-degree endpoints dominate, for alpha > 0 pairs
with fewer dominate, and within a tier the weight is the product of the
non-zero endpoint degrees raised to alpha.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph, GraphError

MODES = ("alpha", "ERR", "ELL", "EHH")

# above this many alive nodes the dense complement mask is replaced by
# rejection sampling
DENSE_LIMIT = 4000


class InfeasibleCostError(GraphError):
    def __init__(self, requested: int, available: int, edges: int):
        self.requested = requested
        self.available = available
        self.max_cost = available / edges if edges else math.inf
        super().__init__(
            f"cannot add {requested} links: only {available} non-adjacent pairs "
            f"(maximum feasible cost {self.max_cost:.6g})"
        )


class CandidateEdge(NamedTuple):
    u: int
    v: int
    link_degree: int
    ku: int
    kv: int


@dataclass(frozen=True)
class EnhancePlan:
    mode: str
    cost: float
    seed: int = 0
    alpha: float | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.mode == "alpha" and self.alpha is None:
            raise ValueError("alpha mode needs an alpha value")
        if self.mode != "alpha" and self.alpha is not None:
            raise ValueError(f"{self.mode} takes no alpha")
        if not self.cost >= 0:
            raise ValueError(f"cost must be non-negative, got {self.cost}")

    @property
    def label(self) -> str:
        return f"alpha={self.alpha:g}" if self.mode == "alpha" else self.mode


def links_for_cost(edges: int, cost: float) -> int:
    """Number of new links d for cost C = d / |E_init|, rounded half up."""
    return int(math.floor(cost * edges + 0.5))


def complement_size(g: Graph) -> int:
    n = g.alive_count
    return n * (n - 1) // 2 - g.edge_count


def complement_edges(g: Graph) -> list[CandidateEdge]:
    """All unordered non-adjacent pairs of alive nodes with their link degrees."""
    nodes = list(g.nodes())
    adj = g.adj
    out = []
    for i, u in enumerate(nodes):
        ku = len(adj[u])
        for v in nodes[i + 1 :]:
            if v not in adj[u]:
                kv = len(adj[v])
                out.append(CandidateEdge(u, v, ku * kv, ku, kv))
    return out


def link_probabilities(candidates: list[CandidateEdge], alpha: float) -> np.ndarray:
    """Selection probability of every candidate, k_e^alpha normalised."""
    if not candidates:
        raise GraphError("no candidate links")
    ku = np.array([c.ku for c in candidates], dtype=np.float64)
    kv = np.array([c.kv for c in candidates], dtype=np.float64)
    if alpha == 0:
        return np.full(len(candidates), 1.0 / len(candidates))
    zeros = (ku == 0).astype(int) + (kv == 0).astype(int)
    tier = zeros.max() if alpha < 0 else zeros.min()
    keep = zeros == tier
    with np.errstate(divide="ignore"):
        logk = np.where(ku > 0, np.log(ku), 0.0) + np.where(kv > 0, np.log(kv), 0.0)
    logw = np.where(keep, alpha * logk, -np.inf)
    w = np.exp(logw - logw[keep].max())
    return w / w.sum()


def sample_new_link(
    candidates: list[CandidateEdge], alpha: float, rng: np.random.Generator
) -> CandidateEdge:
    p = link_probabilities(candidates, alpha)
    cdf = np.cumsum(p)
    i = int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right"))
    return candidates[min(i, len(candidates) - 1)]


class _AlphaSampler:
    """Exact draws from the (k_u k_v)^alpha law over non-adjacent pairs.

    Drawing u from its endpoint marginal a_u * sum_{v non-adj} a_v and then v
    proportional to a_v among u's non-neighbours samples each unordered pair
    with probability a_u a_v / sum_pairs, because the pair is reachable in
    either order.
    """

    def __init__(self, g: Graph, alpha: float, rng: np.random.Generator):
        self.g = g
        self.alpha = alpha
        self.rng = rng
        n = g.node_count
        self.alive = np.array(g.alive, dtype=bool)
        self.deg = np.array(g.degrees(), dtype=np.float64)
        self.dense = g.alive_count <= DENSE_LIMIT
        if self.dense:
            comp = np.outer(self.alive, self.alive).astype(np.float64)
            np.fill_diagonal(comp, 0.0)
            for u, v in g.edges():
                comp[u, v] = comp[v, u] = 0.0
            self.comp = comp
        self.n = n

    def _weights(self, mask: np.ndarray) -> np.ndarray:
        if self.alpha == 0:
            return mask.astype(np.float64)
        with np.errstate(divide="ignore"):
            logk = np.where(mask, np.log(np.where(self.deg > 0, self.deg, 1.0)), -np.inf)
        logw = self.alpha * logk
        logw[~mask] = -np.inf
        return np.exp(logw - logw[mask].max())

    def _pick(self, weights: np.ndarray) -> int:
        cdf = np.cumsum(weights)
        i = int(np.searchsorted(cdf, self.rng.random() * cdf[-1], side="right"))
        return min(i, len(weights) - 1)

    def draw(self) -> tuple[int, int]:
        alive, deg = self.alive, self.deg
        zero = alive & (deg == 0)
        nz = int(zero.sum())
        if self.alpha < 0 and nz >= 2:
            idx = np.flatnonzero(zero)
            u, v = self.rng.choice(idx, size=2, replace=False)
            return int(u), int(v)
        if self.alpha < 0 and nz == 1:
            u = int(np.flatnonzero(zero)[0])
            v = self._pick(self._weights(alive & (deg > 0)))
            return u, v
        mask = alive if self.alpha == 0 else alive & (deg > 0)
        if mask.sum() >= 2:
            a = self._weights(mask)
            pair = self._draw_dense(a) if self.dense else self._draw_rejection(a)
            if pair is not None:
                return pair
        return self._draw_explicit()

    def _draw_dense(self, a: np.ndarray) -> tuple[int, int] | None:
        marginal = a * (self.comp @ a)
        if not marginal.sum() > 0:
            return None
        u = self._pick(marginal)
        v = self._pick(a * self.comp[u])
        return u, v

    def _draw_rejection(self, a: np.ndarray, tries: int = 10000) -> tuple[int, int] | None:
        cdf = np.cumsum(a)
        adj = self.g.adj
        for _ in range(tries):
            u, v = np.searchsorted(cdf, self.rng.random(2) * cdf[-1], side="right")
            u, v = int(min(u, self.n - 1)), int(min(v, self.n - 1))
            if u != v and v not in adj[u]:
                return u, v
        return None

    def _draw_explicit(self) -> tuple[int, int]:
        c = sample_new_link(complement_edges(self.g), self.alpha, self.rng)
        return c.u, c.v

    def added(self, u: int, v: int) -> None:
        self.deg[u] += 1
        self.deg[v] += 1
        if self.dense:
            self.comp[u, v] = self.comp[v, u] = 0.0


class _ExtremeSampler:
    """ELL / EHH: the non-adjacent pair with lowest / highest degrees.

    ELL minimises (min degree, max degree) lexicographically; EHH maximises
    (max degree, min degree). Ties are broken uniformly at random.
    """

    def __init__(self, g: Graph, highest: bool, rng: np.random.Generator):
        self.g = g
        self.highest = highest
        self.rng = rng
        self.buckets: dict[int, set[int]] = {}
        for u in g.nodes():
            self.buckets.setdefault(len(g.adj[u]), set()).add(u)

    def draw(self) -> tuple[int, int]:
        adj = self.g.adj
        keys = sorted(self.buckets, reverse=self.highest)
        for i, ka in enumerate(keys):
            da = self.buckets[ka]
            hist = Counter(len(adj[w]) for u in da for w in adj[u])
            for kb in keys[i:]:
                na, nb = len(da), len(self.buckets[kb])
                if kb == ka:
                    free = na * (na - 1) // 2 - hist[ka] // 2
                else:
                    free = na * nb - hist[kb]
                if free > 0:
                    return self._uniform_pair(sorted(da), sorted(self.buckets[kb]), kb == ka)
        raise GraphError("no candidate links")

    def _uniform_pair(self, da: list[int], db: list[int], same: bool) -> tuple[int, int]:
        adj = self.g.adj
        rng = self.rng
        for _ in range(64):
            u = da[int(rng.integers(len(da)))]
            v = db[int(rng.integers(len(db)))]
            if u != v and v not in adj[u]:
                return u, v
        pairs = [(u, v) for u in da for v in db if (u < v if same else True) and v not in adj[u]]
        return pairs[int(rng.integers(len(pairs)))]

    def added(self, u: int, v: int) -> None:
        for w in (u, v):
            k = len(self.g.adj[w])  # degree after the addition
            b = self.buckets[k - 1]
            b.discard(w)
            if not b:
                del self.buckets[k - 1]
            self.buckets.setdefault(k, set()).add(w)


def add_links(
    h: Graph, mode: str, d: int, rng: np.random.Generator, alpha: float | None = None
) -> list[tuple[int, int]]:
    """Add ``d`` links to ``h`` in place, one at a time."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    available = complement_size(h)
    if d > available:
        raise InfeasibleCostError(d, available, h.edge_count)
    if d == 0:
        return []
    if mode in ("ELL", "EHH"):
        sampler = _ExtremeSampler(h, mode == "EHH", rng)
    else:
        sampler = _AlphaSampler(h, 0.0 if mode == "ERR" else float(alpha), rng)
    added = []
    for _ in range(d):
        u, v = sampler.draw()
        if u > v:
            u, v = v, u
        h.add_edge(u, v)
        sampler.added(u, v)
        added.append((u, v))
    return added


def enhance(g: Graph, plan: EnhancePlan) -> tuple[Graph, list[tuple[int, int]]]:
    """Add round(C * |E|) links to a copy of ``g`` following ``plan``."""
    h = g.copy()
    d = links_for_cost(g.edge_count, plan.cost)
    rng = np.random.default_rng(plan.seed)
    return h, add_links(h, plan.mode, d, rng, plan.alpha)
