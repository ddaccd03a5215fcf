"""Mean-field prediction of degree moments after adding links.

Each node i receives a share r_i of the endpoints of new links, with weights
fixed at the initial degrees:

    r_i = sum_{j non-adj i} (k_i k_j)^alpha / W,   W = sum over non-adjacent pairs

so sum_i r_i = 2. After d new links the expected degrees k_i + r_i d give

    kappa(d) = mean((k_i + r_i d)^2) / (2 (|E| + d) / N).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError
from .metrics import fr_from_kappa


@dataclass
class TheoryPrediction:
    r: np.ndarray
    d: int
    kappa_pred: float
    f_r_pred: float


def endpoint_fractions(g: Graph, alpha: float) -> np.ndarray:
    """r_i for every node id (0 for removed nodes)."""
    nodes = list(g.nodes())
    n = g.node_count
    deg = np.array(g.degrees(), dtype=np.float64)
    pairs = [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1 :] if v not in g.adj[u]]
    if not pairs:
        raise GraphError("graph has no non-adjacent pairs")
    pu = np.array([p[0] for p in pairs])
    pv = np.array([p[1] for p in pairs])
    ku, kv = deg[pu], deg[pv]
    if alpha == 0:
        w = np.ones(len(pairs))
    else:
        # zero degrees: same eps -> 0 tiering as the enhancer
        zeros = (ku == 0).astype(int) + (kv == 0).astype(int)
        tier = zeros.max() if alpha < 0 else zeros.min()
        keep = zeros == tier
        logk = np.log(np.where(ku > 0, ku, 1.0)) + np.log(np.where(kv > 0, kv, 1.0))
        logw = np.where(keep, alpha * logk, -np.inf)
        w = np.exp(logw - logw[keep].max())
    r = np.zeros(n)
    np.add.at(r, pu, w)
    np.add.at(r, pv, w)
    return r / w.sum()


def expected_kappa(g: Graph, r: np.ndarray, d: int) -> float:
    nodes = np.fromiter(g.nodes(), dtype=np.int64)
    k0 = np.array(g.degrees(), dtype=np.float64)[nodes]
    n = len(nodes)
    second = np.sum((k0 + r[nodes] * d) ** 2) / n
    first = 2.0 * (g.edge_count + d) / n
    if first == 0:
        raise GraphError("mean degree is 0; kappa undefined")
    return float(second / first)


def predicted_kappa(g: Graph, alpha: float, d: int) -> float:
    if d < 0:
        raise ValueError("d must be non-negative")
    return expected_kappa(g, endpoint_fractions(g, alpha), d)


def predicted_f_r(kappa_pred: float) -> float:
    return fr_from_kappa(kappa_pred)[0]


def predict(g: Graph, alpha: float, d: int) -> TheoryPrediction:
    r = endpoint_fractions(g, alpha)
    kappa = expected_kappa(g, r, d)
    return TheoryPrediction(r, d, kappa, predicted_f_r(kappa))


def predict_curve(g: Graph, alpha: float, ds) -> list[TheoryPrediction]:
    """Predictions for several d at one alpha; r is computed once."""
    r = endpoint_fractions(g, alpha)
    out = []
    for d in ds:
        kappa = expected_kappa(g, r, int(d))
        out.append(TheoryPrediction(r, int(d), kappa, predicted_f_r(kappa)))
    return out
