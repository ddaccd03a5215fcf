"""Undirected simple graph with logical node removal.

Nodes are dense integer ids ``0..N-1`` fixed at construction. Removing a node
clears its edges and marks it dead; ids are never reused or compacted, so an
attack run can refer to the same node ids from start to finish.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NodeError(GraphError):
    """Node id out of range, or node already removed."""


class Graph:
    def __init__(self, node_count: int = 0, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 0:
            raise GraphError(f"node_count must be non-negative, got {node_count}")
        self.adj: list[set[int]] = [set() for _ in range(node_count)]
        self.alive: list[bool] = [True] * node_count
        self._n_alive = node_count
        self._m = 0
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def node_count(self) -> int:
        return len(self.adj)

    @property
    def alive_count(self) -> int:
        return self._n_alive

    @property
    def edge_count(self) -> int:
        return self._m

    def _check(self, u: int) -> None:
        if not 0 <= u < len(self.adj):
            raise NodeError(f"node {u} out of range [0, {len(self.adj)})")
        if not self.alive[u]:
            raise NodeError(f"node {u} has been removed")

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}")
        if v in self.adj[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self._m += 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def remove_node(self, u: int) -> None:
        self._check(u)
        for w in self.adj[u]:
            self.adj[w].discard(u)
        self._m -= len(self.adj[u])
        self.adj[u] = set()
        self.alive[u] = False
        self._n_alive -= 1

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        """Degree of every node id; removed nodes report 0."""
        return [len(s) for s in self.adj]

    def nodes(self) -> Iterator[int]:
        """Alive node ids in ascending order."""
        return (u for u, a in enumerate(self.alive) if a)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        for u, nbrs in enumerate(self.adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g.adj = [set(s) for s in self.adj]
        g.alive = list(self.alive)
        g._n_alive = self._n_alive
        g._m = self._m
        return g

    def __repr__(self) -> str:
        return f"Graph(alive={self._n_alive}/{len(self.adj)}, edges={self._m})"

    # small constructors used throughout tests and examples
    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a simple cycle needs at least 3 nodes")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, n: int) -> Graph:
        """Star with hub 0 and ``n - 1`` leaves."""
        return cls(n, ((0, i) for i in range(1, n)))


@dataclass(frozen=True)
class DegreeStats:
    mean_degree: float
    second_moment: float
    kappa: float


def degree_stats(g: Graph) -> DegreeStats:
    """First and second degree moments over alive nodes, and their ratio kappa."""
    n = g.alive_count
    if n == 0:
        raise GraphError("no alive nodes")
    s1 = s2 = 0
    for u in g.nodes():
        k = len(g.adj[u])
        s1 += k
        s2 += k * k
    if s1 == 0:
        raise GraphError("every alive node has degree 0; kappa is undefined")
    return DegreeStats(s1 / n, s2 / n, s2 / s1)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable or removed nodes."""
    g._check(source)
    dist = [-1] * g.node_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    seen = [not a for a in g.alive]
    comps = []
    for s in g.nodes():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def largest_component_size(g: Graph) -> int:
    return max((len(c) for c in connected_components(g)), default=0)


def largest_component_fraction(g: Graph) -> float:
    """Relative size S of the largest cluster, normalised by the alive count."""
    if g.alive_count == 0:
        raise GraphError("no alive nodes")
    return largest_component_size(g) / g.alive_count
