"""Barabasi-Albert graph generation and edge-list files.

All randomness goes through ``numpy.random.Generator`` backed by PCG64
(``numpy.random.default_rng(seed)``), which yields the same stream on every
platform for a given seed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError


@dataclass(frozen=True)
class BAParams:
    m: int
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n <= self.m:
            raise ValueError(f"BA model needs n > m, got m={self.m}, n={self.n}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


def generate_ba(params: BAParams) -> Graph:
    """Grow a BA(m, n) graph from a complete seed graph on m nodes.

    Each arriving node links to m distinct existing nodes chosen with
    probability proportional to degree. With m = 1 the seed node has degree
    0, so the first arrival attaches to it directly.
    """
    m, n = params.m, params.n
    rng = np.random.default_rng(params.seed)
    g = Graph.complete(m)
    g.adj.extend(set() for _ in range(n - m))
    g.alive.extend([True] * (n - m))
    g._n_alive = n
    # each node appears once per incident edge end
    repeated = [u for u in range(m) for _ in range(m - 1)]
    for source in range(m, n):
        if repeated:
            targets: list[int] = []
            chosen = set()
            while len(targets) < m:
                t = repeated[int(rng.integers(len(repeated)))]
                if t not in chosen:
                    chosen.add(t)
                    targets.append(t)
        else:
            targets = list(range(source))
        for t in targets:
            g.add_edge(source, t)
        repeated.extend(targets)
        repeated.extend([source] * m)
    return g


class EdgeListError(GraphError):
    def __init__(self, msg: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse edge-list text; returns the graph and the id -> label mapping."""
    index: dict[str, int] = {}
    labels: list[str] = []
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two labels, got {len(parts)}: {raw!r}", lineno)
        a, b = parts
        if a == b:
            raise EdgeListError(f"self-loop on {a!r}", lineno)
        ids = []
        for lab in (a, b):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            ids.append(index[lab])
        pairs.append(ids)
    g = Graph(len(labels))
    for u, v in pairs:
        if not g.has_edge(u, v):
            g.add_edge(u, v)
    return g, labels


def load_edge_list(path: str | os.PathLike) -> tuple[Graph, list[str]]:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(edges, labels: list[str] | None = None) -> str:
    lines = []
    for u, v in edges:
        if labels is not None:
            lines.append(f"{labels[u]} {labels[v]}\n")
        else:
            lines.append(f"{u} {v}\n")
    return "".join(lines)


def save_edge_list(g: Graph, path: str | os.PathLike, labels: list[str] | None = None) -> None:
    """Write alive edges as sorted ``u v`` lines (u < v by id)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g.edges(), labels))
