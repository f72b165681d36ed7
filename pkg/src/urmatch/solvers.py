"""Exact computation of the matching, uniquely-restricted matching, and
acyclic matching numbers with witness matchings.

max_matching runs the blossom algorithm.  The restricted variants share a
branch-and-bound skeleton over edges in canonical order: both predicates
are hereditary (closed under subsets), so a branch dies as soon as the
partial matching fails its predicate; a cheap size bound prunes the rest.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .blossom import maximum_matching_edges
from .graph import Edge, Graph
from .matchings import (
    Matching,
    check_matching,
    is_acyclic_matching,
    is_uniquely_restricted_fast,
    matching_to_pairs,
)

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Matching
    optimal: bool
    nodes: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "optimal": self.optimal,
            "witness": matching_to_pairs(self.witness),
            "nodes": self.nodes,
            "millis": round(self.elapsed * 1000.0, 3),
        }


def max_matching(g: Graph) -> SolveResult:
    """Maximum matching size and witness via blossom contraction."""
    start = time.perf_counter()
    edges = maximum_matching_edges(g)
    witness = frozenset(Edge(u, v) for u, v in edges)
    check_matching(g, witness)
    return SolveResult(len(witness), witness, True, g.vertex_count, time.perf_counter() - start)


def nu_ur_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Maximum uniquely restricted matching via branch and bound."""
    return _branch_and_bound(
        g,
        lambda graph, m: is_uniquely_restricted_fast(graph, m, validate=False)[0],
        budget,
    )


def nu_ac_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Maximum acyclic matching via branch and bound."""
    return _branch_and_bound(
        g,
        lambda graph, m: is_acyclic_matching(graph, m, validate=False),
        budget,
    )


class _BudgetExhausted(Exception):
    pass


def _branch_and_bound(
    g: Graph, predicate: Callable[[Graph, Matching], bool], budget: int
) -> SolveResult:
    start = time.perf_counter()
    edges = sorted(g.edges())
    m = len(edges)
    n = g.vertex_count
    best: list[Edge] = []
    current: list[Edge] = []
    covered: set[int] = set()
    nodes = 0

    def extend(next_index: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if len(current) > len(best):
            best = current.copy()
        bound = len(current) + min(m - next_index, (n - len(covered)) // 2)
        if bound <= len(best):
            return
        for j in range(next_index, m):
            e = edges[j]
            if e.u in covered or e.v in covered:
                continue
            current.append(e)
            covered.update(e)
            if predicate(g, frozenset(current)):
                extend(j + 1)
            current.pop()
            covered.difference_update(e)

    optimal = True
    try:
        extend(0)
    except _BudgetExhausted:
        optimal = False
    witness = frozenset(best)
    check_matching(g, witness)
    if not predicate(g, witness):
        raise AssertionError("solver produced a witness violating its predicate")
    return SolveResult(len(witness), witness, optimal, nodes, time.perf_counter() - start)
