"""Immutable simple-graph representation and structural queries.

Vertices are dense integers 0..n-1.  Graphs are value objects: every
operation returns a new graph, so instances are safe to share across
threads.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Structurally invalid graph input or argument."""


class _EdgeBase(namedtuple("Edge", ["u", "v"])):
    __slots__ = ()

    def __new__(cls, u: int, v: int):
        if u == v:
            raise GraphError(f"loop edge ({u},{v}) not allowed")
        if u > v:
            u, v = v, u
        return super().__new__(cls, u, v)


class Edge(_EdgeBase):
    """Undirected edge, stored with the smaller endpoint first."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"Edge({self.u}, {self.v})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense vertex ids and sorted adjacency."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge ({u},{v}) not allowed")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        return Graph(n, tuple(tuple(sorted(s)) for s in adj), m)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[Edge]:
        """Edges in sorted (u, v) order, u < v."""
        for u in range(self.vertex_count):
            for v in self.adjacency[u]:
                if u < v:
                    yield Edge(u, v)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)


@dataclass(frozen=True)
class DegreeProfile:
    """Degree summary: max/min degree, vertices of degree <= 1, isolated count."""

    max_degree: int
    min_degree: int
    count_degree_le1: int
    isolated_count: int


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.vertex_count
    blocks: list[list[int]] = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    block.append(y)
                    stack.append(y)
        block.sort()
        blocks.append(block)
    return blocks


def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or len(components(g)) == 1


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    BFS from every vertex; a non-tree edge seen at (x, y) witnesses a cycle
    of length dist[x] + dist[y] + 1, and the minimum over all start vertices
    is exact.
    """
    best: int | float = math.inf
    n = g.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            if dist[x] * 2 >= best:
                break
            for y in g.adjacency[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cand = dist[x] + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def degree_profile(g: Graph) -> DegreeProfile:
    if g.vertex_count == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    degs = g.degrees()
    return DegreeProfile(
        max_degree=max(degs),
        min_degree=min(degs),
        count_degree_le1=sum(1 for d in degs if d <= 1),
        isolated_count=sum(1 for d in degs if d == 0),
    )


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the complement of ``s``, densely relabeled.

    Returns the new graph and the old-to-new vertex map for kept vertices.
    """
    drop = set(s)
    for v in drop:
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"vertex {v} out of range")
    keep = [v for v in range(g.vertex_count) if v not in drop]
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [
        (relabel[u], relabel[v])
        for u in keep
        for v in g.adjacency[u]
        if u < v and v not in drop
    ]
    return Graph.from_edges(len(keep), edges), relabel


def contract_set(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Merge a connected vertex set into one vertex; loops and parallels removed.

    The merged vertex receives the highest new id; the old-to-new map sends
    every vertex of ``s`` to it.
    """
    group = sorted(set(s))
    if not group:
        raise GraphError("cannot contract the empty set")
    for v in group:
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"vertex {v} out of range")
    if not _induced_connected(g, set(group)):
        raise GraphError(f"contracted set {group} does not induce a connected subgraph")
    drop = set(group)
    keep = [v for v in range(g.vertex_count) if v not in drop]
    relabel = {v: i for i, v in enumerate(keep)}
    super_id = len(keep)
    for v in group:
        relabel[v] = super_id
    edge_set = set()
    for u in range(g.vertex_count):
        for v in g.adjacency[u]:
            if u < v:
                a, b = relabel[u], relabel[v]
                if a != b:
                    edge_set.add((min(a, b), max(a, b)))
    return Graph.from_edges(super_id + 1, sorted(edge_set)), relabel


def _induced_connected(g: Graph, group: set[int]) -> bool:
    start = next(iter(group))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y in group and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == group


def spanning_tree_endvertex(g: Graph) -> int:
    """A leaf of a BFS spanning tree; removing it keeps the graph connected."""
    if g.vertex_count < 2:
        raise GraphError("need at least two vertices")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    parent = [-1] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[0] = True
    order = [0]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
    internal = set(parent) - {-1}
    return min(v for v in range(g.vertex_count) if v not in internal)
