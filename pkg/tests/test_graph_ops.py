"""Structural queries: components, girth, degree profiles, deletion,
contraction, spanning-tree endvertices."""

from __future__ import annotations

import math
import random

import networkx as nx
import pytest

from urmatch import (
    Graph,
    GraphError,
    complete_bipartite,
    components,
    contract_set,
    cycle_graph,
    degree_profile,
    delete_vertices,
    girth,
    gk_gadget,
    path_graph,
    petersen_graph,
    spanning_tree_endvertex,
)
from .conftest import nx_copy


def _random_graph(rng, n_max=8):
    n = rng.randint(1, n_max)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
    return Graph.from_edges(n, edges)


def test_components_examples():
    assert len(components(cycle_graph(4))) == 1
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert components(two) == [[0, 1], [2, 3]]
    assert len(components(gk_gadget(1))) == 1


def test_components_against_networkx():
    rng = random.Random(3)
    for _ in range(300):
        g = _random_graph(rng)
        ours = [set(b) for b in components(g)]
        theirs = sorted(
            (set(c) for c in nx.connected_components(nx_copy(g))), key=min
        )
        assert ours == theirs


def test_girth_examples():
    assert girth(cycle_graph(5)) == 5
    assert girth(path_graph(6)) == math.inf
    assert girth(complete_bipartite(2, 3)) == 4
    assert girth(petersen_graph()) == 5


def _girth_by_edge_removal(g: Graph):
    # independent oracle: shortest cycle through any edge = 1 + dist after
    # removing that edge
    best = math.inf
    for e in g.edges():
        G = nx_copy(g)
        G.remove_edge(e.u, e.v)
        try:
            best = min(best, nx.shortest_path_length(G, e.u, e.v) + 1)
        except nx.NetworkXNoPath:
            continue
    return best


def test_girth_against_oracle():
    rng = random.Random(5)
    for _ in range(200):
        g = _random_graph(rng)
        assert girth(g) == _girth_by_edge_removal(g)


def test_degree_profile_examples():
    p = degree_profile(complete_bipartite(1, 3))
    assert (p.max_degree, p.min_degree, p.count_degree_le1) == (3, 1, 3)
    p = degree_profile(cycle_graph(6))
    assert (p.max_degree, p.min_degree, p.count_degree_le1) == (2, 2, 0)
    p = degree_profile(gk_gadget(1))
    assert p.max_degree == 3 and p.isolated_count == 0
    with pytest.raises(GraphError):
        degree_profile(Graph.from_edges(0, []))


def test_delete_vertices():
    c4 = cycle_graph(4)
    g, relabel = delete_vertices(c4, {3})
    assert (g.vertex_count, g.edge_count) == (3, 2)  # P3
    assert relabel == {0: 0, 1: 1, 2: 2}
    k23 = complete_bipartite(2, 3)
    g, _ = delete_vertices(k23, {0, 1})
    assert (g.vertex_count, g.edge_count) == (3, 0)
    g, relabel = delete_vertices(c4, set())
    assert g == c4 and relabel == {v: v for v in range(4)}
    with pytest.raises(GraphError):
        delete_vertices(c4, {9})


def test_contract_set():
    c4 = cycle_graph(4)
    g, relabel = contract_set(c4, {0, 1})
    assert (g.vertex_count, g.edge_count) == (3, 3)  # triangle
    assert relabel[0] == relabel[1] == 2
    two = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])
    g, _ = contract_set(two, {0, 1, 2, 3})
    assert (g.vertex_count, g.edge_count) == (3, 1)
    with pytest.raises(GraphError):
        contract_set(c4, set())
    with pytest.raises(GraphError):
        contract_set(c4, {0, 2})  # opposite corners: not connected


def test_contract_then_delete_equals_delete():
    rng = random.Random(11)
    for _ in range(200):
        g = _random_graph(rng, n_max=9)
        comps = components(g)
        comp = comps[rng.randrange(len(comps))]
        if len(comp) < 1:
            continue
        contracted, relabel = contract_set(g, comp)
        super_id = relabel[comp[0]]
        via_contract, _ = delete_vertices(contracted, {super_id})
        direct, _ = delete_vertices(g, set(comp))
        assert via_contract == direct


def test_spanning_tree_endvertex():
    u = spanning_tree_endvertex(path_graph(3))
    assert u in (0, 2)
    for g in (cycle_graph(4), petersen_graph(), gk_gadget(1)):
        u = spanning_tree_endvertex(g)
        h, _ = delete_vertices(g, {u})
        assert len(components(h)) == 1
    with pytest.raises(GraphError):
        spanning_tree_endvertex(Graph.from_edges(2, []))


def test_graph_invariants():
    rng = random.Random(13)
    for _ in range(100):
        g = _random_graph(rng)
        assert g.edge_count * 2 == sum(g.degrees())
        for u in range(g.vertex_count):
            for v in g.adjacency[u]:
                assert u in g.adjacency[v] and u != v
