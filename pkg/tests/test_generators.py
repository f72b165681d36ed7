"""Generators: structured families, the tightness gadget, and constrained
random graphs."""

from __future__ import annotations

import math

import pytest

from urmatch import (
    GraphError,
    complete_bipartite,
    components,
    degree_profile,
    girth,
    gk_gadget,
    random_forest,
    random_graph,
    robertson_graph,
    write_graph6,
)


def test_complete_bipartite():
    assert (complete_bipartite(1, 1).vertex_count, complete_bipartite(1, 1).edge_count) == (2, 1)
    k23 = complete_bipartite(2, 3)
    assert (k23.vertex_count, k23.edge_count) == (5, 6)
    k33 = complete_bipartite(3, 3)
    assert (k33.vertex_count, k33.edge_count) == (6, 9)
    with pytest.raises(GraphError):
        complete_bipartite(0, 3)


@pytest.mark.parametrize("k", [1, 2, 3, 5, 10, 20])
def test_gk_gadget_formulas(k):
    g = gk_gadget(k)
    assert g.vertex_count == 11 * k + 5
    assert g.edge_count == 15 * k + 6
    assert degree_profile(g).max_degree == 3
    assert len(components(g)) == 1


def test_gk_gadget_rejects_nonpositive():
    with pytest.raises(GraphError):
        gk_gadget(0)


def test_robertson_graph():
    g = robertson_graph()
    assert g.vertex_count == 19
    assert g.edge_count == 38
    assert set(g.degrees()) == {4}
    assert girth(g) == 5
    assert len(components(g)) == 1


def test_random_graph_no_edges():
    g = random_graph(5, 0, None, 123)
    assert g.edge_count == 0 and g.vertex_count == 5


def test_random_graph_constraints_postchecked():
    g = random_graph(20, 3, 5, 1)
    assert degree_profile(g).max_degree <= 3
    assert girth(g) >= 5
    assert g.edge_count > 0


def test_random_graph_deterministic():
    a = random_graph(20, 3, 5, 1)
    b = random_graph(20, 3, 5, 1)
    assert write_graph6(a) == write_graph6(b)
    c = random_graph(20, 3, 5, 2)
    assert write_graph6(a) != write_graph6(c)


def test_random_graph_various_params():
    for seed in range(10):
        g = random_graph(15, 4, None, seed)
        assert degree_profile(g).max_degree <= 4
        h = random_graph(14, 3, 7, seed)
        assert girth(h) >= 7


def test_random_forest():
    for seed in range(5):
        g = random_forest(12, 3, seed)
        assert girth(g) == math.inf
        assert degree_profile(g).max_degree <= 3


def test_random_graph_validation_errors():
    with pytest.raises(GraphError):
        random_graph(0, 3, None, 1)
    with pytest.raises(GraphError):
        random_graph(5, -1, None, 1)
    with pytest.raises(GraphError):
        random_graph(5, 3, 2, 1)
