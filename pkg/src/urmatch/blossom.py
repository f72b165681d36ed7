"""Maximum cardinality matching via Edmonds' blossom algorithm.

Array-based O(V^3) implementation: repeated BFS for augmenting paths with
blossom contraction through base pointers.  Deterministic: vertices are
scanned in increasing order, so the returned mate array is a pure function
of the graph.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph


def maximum_matching_mates(g: Graph) -> list[int]:
    """Mate array of a maximum matching; mates[v] == -1 for exposed v."""
    n = g.vertex_count
    adj = g.adjacency
    mates = [-1] * n

    for root in range(n):
        if mates[root] != -1:
            continue
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_queue[root] = True
        queue = deque([root])
        finish = -1

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            while True:
                a = base[a]
                on_path[a] = True
                if mates[a] == -1:
                    break
                a = parent[mates[a]]
            while True:
                b = base[b]
                if on_path[b]:
                    return b
            # unreachable: both walks end at the tree root

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = True
                in_blossom[base[mates[v]]] = True
                parent[v] = child
                child = mates[v]
                v = parent[mates[v]]

        while queue and finish == -1:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mates[v] == to:
                    continue
                if to == root or (mates[to] != -1 and parent[mates[to]] != -1):
                    # odd cycle: contract the blossom onto its base
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mates[to] == -1:
                        finish = to
                        break
                    if not in_queue[mates[to]]:
                        in_queue[mates[to]] = True
                        queue.append(mates[to])

        if finish != -1:
            v = finish
            while v != -1:
                pv = parent[v]
                ppv = mates[pv]
                mates[v] = pv
                mates[pv] = v
                v = ppv
    return mates


def maximum_matching_edges(g: Graph) -> list[tuple[int, int]]:
    mates = maximum_matching_mates(g)
    return [(v, mates[v]) for v in range(g.vertex_count) if v < mates[v]]


def has_perfect_matching(g: Graph) -> bool:
    if g.vertex_count % 2:
        return False
    mates = maximum_matching_mates(g)
    return all(m != -1 for m in mates)
