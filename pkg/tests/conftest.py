"""Shared fixtures: isomorphism-free small-graph corpora (from the published
graph atlas shipped with networkx) and definition-level oracles kept
independent of the library's fast paths."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from urmatch import Graph


@lru_cache(maxsize=1)
def _atlas_connected() -> tuple[Graph, ...]:
    out = []
    for G in graph_atlas_g():
        if G.number_of_nodes() >= 1 and nx.is_connected(G):
            out.append(Graph.from_edges(G.number_of_nodes(), list(G.edges())))
    return tuple(out)


@pytest.fixture(scope="session")
def atlas_connected() -> tuple[Graph, ...]:
    """All connected graphs on 1..7 vertices up to isomorphism (996 of them);
    properties checked here are isomorphism-invariant, so this corpus covers
    every labeled connected graph with n <= 7."""
    graphs = _atlas_connected()
    assert len(graphs) == 996
    return graphs


def all_matchings_brute(g: Graph) -> list[frozenset]:
    """Every matching as a frozenset of (u, v) tuples, by direct edge-subset
    filtering; independent of the library's enumeration."""
    edges = [(e.u, e.v) for e in g.edges()]
    result = [frozenset()]

    def rec(i: int, cur: list, covered: set) -> None:
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in covered and v not in covered:
                cur.append(edges[j])
                result.append(frozenset(cur))
                rec(j + 1, cur, covered | {u, v})
                cur.pop()

    rec(0, [], set())
    return result


def ur_flags_by_definition(g: Graph) -> dict[frozenset, bool]:
    """For every matching, the literal definition: no other matching covers
    exactly the same vertex set.  Groups matchings by covered set."""
    groups: dict[frozenset, int] = {}
    matchings = all_matchings_brute(g)
    for m in matchings:
        cov = frozenset(v for e in m for v in e)
        groups[cov] = groups.get(cov, 0) + 1
    return {m: groups[frozenset(v for e in m for v in e)] == 1 for m in matchings}


def acyclic_by_definition(g: Graph, m: frozenset) -> bool:
    covered = {v for e in m for v in e}
    G = nx.Graph()
    G.add_nodes_from(covered)
    G.add_edges_from(
        (u, v) for u in covered for v in g.adjacency[u] if u < v and v in covered
    )
    return nx.is_forest(G) if covered else True


def brute_optima(g: Graph) -> tuple[int, int, int]:
    """(nu, nu_ur, nu_ac) by exhaustive enumeration with definition-level
    predicates."""
    flags = ur_flags_by_definition(g)
    nu = nu_ur = nu_ac = 0
    for m, is_ur in flags.items():
        k = len(m)
        nu = max(nu, k)
        if is_ur:
            nu_ur = max(nu_ur, k)
        if acyclic_by_definition(g, m):
            nu_ac = max(nu_ac, k)
    return nu, nu_ur, nu_ac


def nx_copy(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from((e.u, e.v) for e in g.edges())
    return G


def thm2_bound(g: Graph, c: int) -> Fraction:
    return Fraction(g.vertex_count - c, 2) - Fraction(g.edge_count, 6)


def random_connected_subcubic(rng, n_lo: int = 4, n_hi: int = 12):
    """One random connected subcubic graph or None, via constrained pair
    sampling; independent of the library generator."""
    n = rng.randint(n_lo, n_hi)
    deg = [0] * n
    adj = [set() for _ in range(n)]
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    edges = []
    target = rng.randint(n - 1, (3 * n) // 2)
    for u, v in pairs:
        if len(edges) >= target:
            break
        if deg[u] < 3 and deg[v] < 3:
            deg[u] += 1
            deg[v] += 1
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n:
        return None
    return Graph.from_edges(n, edges)
