"""Matching validity, the uniquely-restricted and acyclic predicates,
alternating-cycle witnesses, and greedy acyclic partitions.

A matching is a frozenset of Edge values of a host graph.  The fast
uniquely-restricted check builds a transition digraph on covered vertices
(arc v -> mate(w) for every non-matching edge {v, w} between covered
vertices); the matching has an alternating cycle iff that digraph has a
directed cycle.  Witnesses are extracted from a shortest directed cycle
and independently validated; a degenerate extraction falls back to a
second-perfect-matching search, so the returned verdict always agrees
with the enumeration oracle.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .blossom import maximum_matching_mates
from .graph import Edge, Graph, GraphError, delete_vertices

Matching = frozenset  # of Edge

ORACLE_GUARD = 24  # max covered vertices for exhaustive enumeration


class MatchingError(GraphError):
    """Edge set is not a valid matching of the host graph."""


class GuardError(GraphError):
    """Exhaustive oracle invoked beyond its size guard."""


def matching_from_pairs(g: Graph, pairs: Iterable[tuple[int, int]]) -> Matching:
    m = frozenset(Edge(u, v) for u, v in pairs)
    check_matching(g, m)
    return m


def check_matching(g: Graph, m: Iterable[Edge]) -> None:
    covered: set[int] = set()
    for e in m:
        if not (0 <= e.u < g.vertex_count and 0 <= e.v < g.vertex_count):
            raise MatchingError(f"edge {e} out of range")
        if not g.has_edge(e.u, e.v):
            raise MatchingError(f"edge {e} not present in host graph")
        if e.u in covered or e.v in covered:
            raise MatchingError(f"edge {e} shares an endpoint with another edge")
        covered.add(e.u)
        covered.add(e.v)


def covered_vertices(m: Iterable[Edge]) -> frozenset[int]:
    return frozenset(v for e in m for v in e)


def matching_to_pairs(m: Iterable[Edge]) -> list[str]:
    """Canonical JSON form: sorted list of "u-v" strings."""
    return [f"{e.u}-{e.v}" for e in sorted(m)]


def matching_from_json(g: Graph, data: Iterable[str]) -> Matching:
    pairs = []
    for item in data:
        parts = str(item).split("-")
        if len(parts) != 2:
            raise MatchingError(f"malformed matching entry {item!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return matching_from_pairs(g, pairs)


def _mate_map(m: Iterable[Edge]) -> dict[int, int]:
    mate: dict[int, int] = {}
    for e in m:
        mate[e.u] = e.v
        mate[e.v] = e.u
    return mate


def is_acyclic_matching(g: Graph, m: Matching, *, validate: bool = True) -> bool:
    """True iff the subgraph induced by the covered vertices is a forest."""
    if validate:
        check_matching(g, m)
    covered = covered_vertices(m)
    uf = {v: v for v in covered}

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for u in covered:
        for v in g.adjacency[u]:
            if u < v and v in covered:
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                uf[ru] = rv
    return True


def _transition_arcs(g: Graph, mate: dict[int, int]) -> dict[int, list[int]]:
    arcs: dict[int, list[int]] = {v: [] for v in mate}
    for v in mate:
        mv = mate[v]
        for w in g.adjacency[v]:
            if w != mv and w in mate:
                arcs[v].append(mate[w])
    return arcs


def _digraph_has_cycle(arcs: dict[int, list[int]]) -> bool:
    color = {v: 0 for v in arcs}  # 0 white, 1 on stack, 2 done
    for s in arcs:
        if color[s]:
            continue
        stack: list[tuple[int, Iterator[int]]] = [(s, iter(arcs[s]))]
        color[s] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == 1:
                    return True
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(arcs[w])))
                    break
            else:
                color[v] = 2
                stack.pop()
    return False


def _shortest_dicycle(arcs: dict[int, list[int]]) -> list[int] | None:
    """Shortest directed cycle by BFS back to each start vertex."""
    best: list[int] | None = None
    for s in sorted(arcs):
        if best is not None and len(best) == 2:
            break
        parent = {s: -1}
        queue = deque([s])
        found = None
        while queue and found is None:
            v = queue.popleft()
            for w in arcs[v]:
                if w == s:
                    found = v
                    break
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if found is None:
            continue
        cyc = [found]
        while cyc[-1] != s:
            cyc.append(parent[cyc[-1]])
        cyc.reverse()
        if best is None or len(cyc) < len(best):
            best = cyc
    return best


def has_alternating_cycle(g: Graph, m: Matching, *, validate: bool = True) -> bool:
    """Transition-digraph cycle test only; no witness construction."""
    if validate:
        check_matching(g, m)
    if len(m) < 2:
        return False
    mate = _mate_map(m)
    return _digraph_has_cycle(_transition_arcs(g, mate))


def is_uniquely_restricted_fast(
    g: Graph, m: Matching, *, validate: bool = True
) -> tuple[bool, tuple[int, ...] | None]:
    """(is_UR, witness): witness is an alternating cycle when the answer is
    False."""
    if validate:
        check_matching(g, m)
    if len(m) < 2:
        return True, None
    mate = _mate_map(m)
    arcs = _transition_arcs(g, mate)
    if not _digraph_has_cycle(arcs):
        return True, None
    dicycle = _shortest_dicycle(arcs)
    if dicycle is not None:
        witness = _witness_from_dicycle(g, m, mate, dicycle)
        if witness is not None:
            return False, witness
    # Degenerate expansion; settle it exactly via a second perfect matching.
    witness = _witness_from_second_matching(g, m)
    if witness is None:
        return True, None
    return False, witness


def _witness_from_dicycle(
    g: Graph, m: Matching, mate: dict[int, int], dicycle: list[int]
) -> tuple[int, ...] | None:
    """Expand each arc into (non-matching edge, matched edge); splice out
    same-parity vertex repeats until the closed walk is a simple cycle."""
    k = len(dicycle)
    walk: list[int] = []
    for i in range(k):
        walk.append(dicycle[i])
        walk.append(mate[dicycle[(i + 1) % k]])
    while True:
        pos: dict[int, int] = {}
        splice = None
        for idx, v in enumerate(walk):
            if v in pos and (idx - pos[v]) % 2 == 0:
                splice = (pos[v], idx)
                break
            if v not in pos:
                pos[v] = idx
        if splice is None:
            break
        p, q = splice
        walk = walk[:p] + walk[q:]
    if len(set(walk)) != len(walk) or len(walk) < 4:
        return None
    cycle = tuple(walk)
    return cycle if validate_alternating_cycle(g, m, cycle) else None


def _witness_from_second_matching(g: Graph, m: Matching) -> tuple[int, ...] | None:
    """Find another perfect matching of the covered-induced subgraph; the
    symmetric difference yields alternating cycles."""
    covered = sorted(covered_vertices(m))
    sub, relabel = delete_vertices(g, set(range(g.vertex_count)) - set(covered))
    back = {new: old for old, new in relabel.items()}
    msub = {Edge(relabel[e.u], relabel[e.v]) for e in m}
    target = len(covered)
    for banned in sorted(msub):
        pruned = Graph.from_edges(
            sub.vertex_count, [e for e in sub.edges() if e != banned]
        )
        mates = maximum_matching_mates(pruned)
        if all(x != -1 for x in mates):
            other = {Edge(v, mates[v]) for v in range(target) if v < mates[v]}
            diff = msub ^ other
            # components of the symmetric difference are alternating cycles
            nbr: dict[int, list[int]] = {}
            for e in diff:
                nbr.setdefault(e.u, []).append(e.v)
                nbr.setdefault(e.v, []).append(e.u)
            start = min(v for v in nbr if len(nbr[v]) == 2)
            cyc = [start]
            prev = -1
            while True:
                nxt = [w for w in nbr[cyc[-1]] if w != prev]
                prev = cyc[-1]
                if nxt[0] == start:
                    break
                cyc.append(nxt[0])
            return tuple(back[v] for v in cyc)
    return None


def validate_alternating_cycle(
    g: Graph, m: Matching, cycle: tuple[int, ...] | list[int]
) -> bool:
    """Independent check: even length, distinct vertices, edges alternate
    between the matching and the rest of the graph."""
    k = len(cycle)
    if k < 4 or k % 2:
        return False
    if len(set(cycle)) != k:
        return False
    flags = []
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not g.has_edge(u, v):
            return False
        flags.append(Edge(u, v) in m)
    return all(flags[i] != flags[(i + 1) % k] for i in range(k))


def is_uniquely_restricted_oracle(
    g: Graph, m: Matching, *, guard: int = ORACLE_GUARD
) -> bool:
    """Definition-based check: m must be the unique perfect matching of the
    subgraph induced by its covered vertices."""
    check_matching(g, m)
    covered = sorted(covered_vertices(m))
    if len(covered) > guard:
        raise GuardError(f"{len(covered)} covered vertices exceed oracle guard {guard}")
    adj = {v: [w for w in g.adjacency[v] if w in set(covered)] for v in covered}
    count = 0

    def extend(uncovered: frozenset[int]) -> None:
        nonlocal count
        if count >= 2:
            return
        if not uncovered:
            count += 1
            return
        low = min(uncovered)
        for w in adj[low]:
            if w in uncovered:
                extend(uncovered - {low, w})

    extend(frozenset(covered))
    return count == 1


def enumerate_matchings(g: Graph, max_size: int | None = None) -> Iterator[Matching]:
    """All matchings of g (including the empty one), canonical order."""
    edges = sorted(g.edges())
    limit = g.vertex_count // 2 if max_size is None else max_size

    def rec(start: int, current: tuple[Edge, ...], covered: set[int]) -> Iterator[Matching]:
        yield frozenset(current)
        if len(current) >= limit:
            return
        for j in range(start, len(edges)):
            e = edges[j]
            if e.u not in covered and e.v not in covered:
                covered.update(e)
                yield from rec(j + 1, current + (e,), covered)
                covered.difference_update(e)

    return rec(0, (), set())


def enumerate_maximum_matchings(g: Graph) -> list[Matching]:
    nu = sum(1 for x in maximum_matching_mates(g) if x != -1) // 2
    return [m for m in enumerate_matchings(g) if len(m) == nu]


def partition_into_acyclic(
    g: Graph, m: Matching, bound: int, *, validate: bool = True
) -> list[Matching] | None:
    """Greedily split a matching into at most ``bound`` acyclic classes;
    returns None when the greedy pass fails (failure is a value, not an
    error — callers may retry exhaustively)."""
    if bound < 1:
        raise GraphError(f"bound must be positive, got {bound}")
    if validate:
        check_matching(g, m)
    classes: list[set[Edge]] = []
    for e in sorted(m):
        placed = False
        for cls in classes:
            cls.add(e)
            if is_acyclic_matching(g, frozenset(cls), validate=False):
                placed = True
                break
            cls.remove(e)
        if not placed:
            if len(classes) >= bound:
                return None
            classes.append({e})
    return [frozenset(c) for c in classes]


def partition_into_acyclic_exhaustive(
    g: Graph, m: Matching, bound: int, *, node_guard: int = 200_000
) -> list[Matching] | None:
    """Backtracking partition search; raises GuardError when the node guard
    is exhausted before settling the instance."""
    edges = sorted(m)
    classes: list[set[Edge]] = [set() for _ in range(bound)]
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_guard:
            raise GuardError(f"partition search exceeded {node_guard} nodes")
        if i == len(edges):
            return True
        tried_empty = False
        for cls in classes:
            if not cls:
                if tried_empty:
                    continue  # empty classes are interchangeable
                tried_empty = True
            cls.add(edges[i])
            if is_acyclic_matching(g, frozenset(cls), validate=False) and rec(i + 1):
                return True
            cls.remove(edges[i])
        return False

    if rec(0):
        return [frozenset(c) for c in classes if c]
    return None
