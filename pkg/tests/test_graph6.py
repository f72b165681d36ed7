"""graph6 codec: frozen decodes, round-trips, cross-checks against
networkx's codec, and error reporting."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from urmatch import FormatError, Graph, parse_edge_list, parse_graph6, write_graph6


def test_single_vertex():
    g = parse_graph6("@")
    assert (g.vertex_count, g.edge_count) == (1, 0)
    assert write_graph6(g) == "@"


def test_single_edge():
    # 'A' encodes n=2; '_' is bit pattern 100000: the (0,1) bit set
    g = parse_graph6("A_")
    assert (g.vertex_count, g.edge_count) == (2, 1)
    assert write_graph6(g) == "A_"


def test_five_vertex_star_decode():
    # hand decode: '?' = 000000, '{' = 111100 -> bits 6..9 set, i.e. the
    # pairs (0,4),(1,4),(2,4),(3,4): the star K_{1,4}, n=5, m=4.
    # (verified against networkx below)
    g = parse_graph6("D?{")
    assert (g.vertex_count, g.edge_count) == (5, 4)
    assert sorted(tuple(e) for e in g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    G = nx.from_graph6_bytes(b"D?{")
    assert sorted(map(tuple, map(sorted, G.edges()))) == sorted(
        tuple(e) for e in g.edges()
    )


def test_k23_encode():
    from urmatch import complete_bipartite

    s = write_graph6(complete_bipartite(2, 3))
    g = parse_graph6(s)
    assert (g.vertex_count, g.edge_count) == (5, 6)
    assert s == nx.to_graph6_bytes(nx_complete_bipartite(), header=False).decode().strip()


def nx_complete_bipartite():
    G = nx.Graph()
    G.add_edges_from((i, 2 + j) for i in range(2) for j in range(3))
    return G


def test_header_accepted():
    g = parse_graph6(">>graph6<<A_")
    assert g.edge_count == 1


def test_roundtrip_random_graphs():
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.randint(0, 12)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35
        ]
        g = Graph.from_edges(n, edges)
        s = write_graph6(g)
        h = parse_graph6(s)
        assert h == g
        # cross-check against the independent codec
        G = nx.from_graph6_bytes(s.encode())
        assert sorted(map(tuple, map(sorted, G.edges()))) == sorted(
            tuple(e) for e in g.edges()
        )


def test_large_order_prefix():
    g = Graph.from_edges(63, [(0, 62)])
    s = write_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_errors_carry_offsets():
    with pytest.raises(FormatError):
        parse_graph6("")
    with pytest.raises(FormatError, match="range"):
        parse_graph6("A" + chr(20))
    with pytest.raises(FormatError, match="truncated"):
        parse_graph6("D?")
    with pytest.raises(FormatError, match="trailing"):
        parse_graph6("A_?")
    with pytest.raises(FormatError, match="length prefix"):
        parse_graph6("~A")


def test_parse_edge_list():
    g = parse_edge_list("2 1\n0 1\n")
    assert (g.vertex_count, g.edge_count) == (2, 1)
    c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert (c4.vertex_count, c4.edge_count) == (4, 4)


@pytest.mark.parametrize(
    "text,match",
    [
        ("3 2\n0 1\n0 1", "duplicate"),
        ("3 2\n0 1\n1 0", "duplicate"),
        ("2 1\n0 2", "range"),
        ("2 1\n1 1", "loop"),
        ("2 2\n0 1", "mismatch"),
        ("x y\n", "n m"),
    ],
)
def test_parse_edge_list_errors(text, match):
    with pytest.raises(FormatError, match=match):
        parse_edge_list(text)
