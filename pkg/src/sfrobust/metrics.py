"""Robustness measures: network efficiency, random-failure threshold, betweenness."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .graph import DegreeStats, Graph, GraphError


@dataclass(frozen=True)
class CriticalFraction:
    """Fraction of nodes whose removal collapses the network.

    ``kind`` is ``"random"`` (failures) or ``"targeted"`` (attacks).
    ``subcritical`` marks a graph that is already at or below the
    percolation threshold, in which case ``value`` is clamped to 0.
    """

    value: float
    kind: str
    subcritical: bool = False


def to_csr(g: Graph) -> tuple[csr_matrix, np.ndarray]:
    """Adjacency of the alive subgraph, plus the alive ids in row order."""
    ids = np.fromiter(g.nodes(), dtype=np.int64)
    index = np.full(g.node_count, -1, dtype=np.int64)
    index[ids] = np.arange(len(ids))
    rows, cols = [], []
    for u in ids:
        for w in g.adj[u]:
            rows.append(index[u])
            cols.append(index[w])
    data = np.ones(len(rows), dtype=np.float64)
    return csr_matrix((data, (rows, cols)), shape=(len(ids), len(ids))), ids


def efficiency(g: Graph) -> float:
    """Average inverse shortest-path length over ordered pairs of alive nodes.

    Unreachable pairs contribute 0.
    """
    n = g.alive_count
    if n < 2:
        raise GraphError("efficiency needs at least 2 alive nodes")
    if g.edge_count == 0:
        return 0.0
    a, _ = to_csr(g)
    d = shortest_path(a, method="D", directed=False, unweighted=True)
    with np.errstate(divide="ignore"):
        inv = 1.0 / d
    np.fill_diagonal(inv, 0.0)
    # 1/inf is already 0 for unreachable pairs
    return float(inv.sum() / (n * (n - 1)))


def fr_from_kappa(kappa: float) -> tuple[float, bool]:
    if kappa <= 1:
        raise ValueError(f"kappa must exceed 1, got {kappa}")
    raw = 1.0 - 1.0 / (kappa - 1.0)
    return max(raw, 0.0), kappa <= 2


def critical_fraction_random(stats: DegreeStats) -> CriticalFraction:
    """f_r = 1 - 1/(kappa - 1), clamped at 0 below the threshold."""
    value, sub = fr_from_kappa(stats.kappa)
    return CriticalFraction(value, "random", sub)


def betweenness(g: Graph) -> list[float]:
    """Unnormalised shortest-path betweenness (Brandes), unordered pairs.

    Removed nodes get 0.
    """
    if g.alive_count == 0:
        raise GraphError("no alive nodes")
    n = g.node_count
    adj = g.adj
    cb = [0.0] * n
    for s in g.nodes():
        stack = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        sigma[s] = 1
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv = dist[v] + 1
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                if dist[w] == dv:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                cb[w] += delta[w]
    # every unordered pair was visited from both ends
    return [c / 2.0 for c in cb]
