"""Graph generators: structured families and constrained random graphs."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, degree_profile, girth


class GenerationError(GraphError):
    """Random generation could not satisfy the requested constraints."""


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise GraphError(f"sides must be positive, got ({a},{b})")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


# A 4-regular graph of girth 5 on 19 vertices, found by exhaustive completion
# of the Moore tree.  The (4,5)-cage is unique, so this is the Robertson graph
# up to isomorphism; tests re-verify order, regularity, girth and connectivity.
_ROBERTSON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 8), (2, 9),
    (2, 10), (3, 11), (3, 12), (3, 13), (4, 14), (4, 15), (4, 16), (5, 8),
    (5, 11), (5, 14), (6, 9), (6, 12), (6, 15), (7, 10), (7, 13), (7, 16),
    (8, 12), (8, 16), (9, 13), (9, 17), (10, 15), (10, 18), (11, 15),
    (11, 17), (12, 18), (13, 14), (14, 18), (16, 17), (17, 18),
)


def robertson_graph() -> Graph:
    """The (4,5)-cage: 19 vertices, 4-regular, girth 5."""
    return Graph.from_edges(19, list(_ROBERTSON_EDGES))


def gk_gadget(k: int) -> Graph:
    """Tightness gadget: k connector vertices, each joined to three of 2k+1
    K_{2,3} copies, attached at degree-2 vertices to stay subcubic.

    Layout: connectors are 0..k-1; copy j (1-based) occupies the five ids
    k+5(j-1)..k+5j-1, the first two being its degree-3 side.  Connector i
    sends one edge to copies 2i-1, 2i, 2i+1; a copy's attachment points are
    its lowest-indexed degree-2 vertices, in order of arriving connector.
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    n = k + 5 * (2 * k + 1)
    edges: list[tuple[int, int]] = []
    attach_count = [0] * (2 * k + 2)  # 1-based copy ids

    def copy_vertex(j: int, local: int) -> int:
        return k + 5 * (j - 1) + local

    for j in range(1, 2 * k + 2):
        for a in range(2):
            for b in range(2, 5):
                edges.append((copy_vertex(j, a), copy_vertex(j, b)))
    for i in range(1, k + 1):
        for j in (2 * i - 1, 2 * i, 2 * i + 1):
            slot = attach_count[j]
            attach_count[j] += 1
            edges.append((i - 1, copy_vertex(j, 2 + slot)))
    return Graph.from_edges(n, edges)


def random_graph(
    n: int,
    max_degree: int,
    min_girth: int | None = None,
    seed: int = 0,
) -> Graph:
    """Random maximal graph with degree and girth constraints, deterministic
    for a fixed seed.

    Candidate pairs are tried in one shuffled pass; an edge is added only if
    both endpoints have spare degree and a truncated BFS finds no path shorter
    than min_girth - 1 between them.  Both constraints only tighten as edges
    are added, so one pass yields a maximal admissible graph.  The result is
    post-validated, never silently relaxed.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if max_degree < 0:
        raise GraphError(f"max_degree must be non-negative, got {max_degree}")
    if min_girth is not None and min_girth < 3:
        raise GraphError(f"min_girth must be at least 3, got {min_girth}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if len(adj[u]) >= max_degree or len(adj[v]) >= max_degree:
            continue
        if min_girth is not None and _dist_less_than(adj, u, v, min_girth - 1):
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    g = Graph.from_edges(n, edges)
    profile = degree_profile(g)
    if profile.max_degree > max_degree:
        raise GenerationError(f"generated graph violates max degree {max_degree}")
    if min_girth is not None and girth(g) < min_girth:
        raise GenerationError(f"generated graph violates girth {min_girth}")
    return g


def _dist_less_than(adj: list[set[int]], u: int, v: int, k: int) -> bool:
    """True if dist(u, v) < k; BFS truncated at depth k - 1."""
    if k <= 0:
        return False
    seen = {u}
    frontier = [u]
    for _ in range(k - 1):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    return False


def random_forest(n: int, max_degree: int, seed: int = 0) -> Graph:
    """Random maximal forest under a degree cap (girth constraint n+1 bans
    every cycle)."""
    return random_graph(n, max_degree, min_girth=None if n < 2 else n + 1, seed=seed)


def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices by edge-subset; exponential, n <= 6
    intended."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph.from_edges(n, edges)
        if connected_only and not _connected(g):
            continue
        yield g


def _connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.vertex_count
