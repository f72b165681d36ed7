"""Certified constructive algorithms for uniquely restricted matchings.

Three constructors mirror the inductive lower-bound proofs:

* min-degree peeling for graphs without isolated vertices
  (guarantee n/D - m/D^2),
* a subcubic reduction engine driven by six degree-based rules plus an
  exact-solver base case for cubic components (guarantee (n-c)/2 - m/6),
* a girth-5 engine for D >= 4 (guarantee (n-c)/D).

Every lift is re-checked with the uniquely-restricted test; a failed check
aborts with a diagnostic rather than returning an uncertified matching.
Guarantees are exact rationals, and each trace records the rule sequence
with removed vertices and lifted edges in the input graph's labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import (
    Edge,
    Graph,
    GraphError,
    components,
    contract_set,
    degree_profile,
    delete_vertices,
    girth,
    spanning_tree_endvertex,
)
from .matchings import Matching, check_matching, is_uniquely_restricted_fast, matching_to_pairs
from .solvers import DEFAULT_BUDGET, nu_ur_exact

RULE_MIN_DEGREE_PEEL = "MinDegreePeel"
RULE_DEG1 = "Deg1"
RULE_DEG2_ADJ_BRIDGE_OR_TRIANGLE = "Deg2AdjacentBridgeOrTriangle"
RULE_DEG2_ADJ_CYCLE = "Deg2AdjacentCycle"
RULE_DEG2_TRIANGLE = "Deg2Triangle"
RULE_DEG2_C4_CONTRACT = "Deg2C4Contract"
RULE_DEG2_FEW_COMPONENTS = "Deg2FewComponents"
RULE_DEG2_EDGE_SPLICE = "Deg2EdgeSplice"
RULE_DEG2_PATH_PEEL = "Deg2PathPeel"
RULE_MIN_DEG_PEEL_GIRTH5 = "MinDegPeelGirth5"
RULE_REGULAR_VERTEX_DROP = "RegularVertexDrop"
RULE_CUBIC_BASE = "CubicBase"

CUBIC_BASE_GUARD = 24


class CertificationError(GraphError):
    """A lifted matching failed its uniquely-restricted re-check."""


@dataclass
class ReductionStep:
    rule: str
    removed: tuple[int, ...]
    lifted_edges: tuple[Edge, ...]
    added_aux_edges: tuple[Edge, ...] = ()
    bookkeeping: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule,
            "removed": list(self.removed),
            "lifted_edges": matching_to_pairs(self.lifted_edges),
            "added_aux_edges": matching_to_pairs(self.added_aux_edges),
            "bookkeeping": dict(sorted(self.bookkeeping.items())),
        }


@dataclass
class ReductionTrace:
    steps: list[ReductionStep]
    final_matching: Matching
    guarantee: Fraction
    guaranteed: bool

    def to_json_dict(self) -> dict:
        return {
            "steps": [s.to_json_dict() for s in self.steps],
            "final_matching": matching_to_pairs(self.final_matching),
            "guarantee": {"num": self.guarantee.numerator, "den": self.guarantee.denominator},
            "guaranteed": self.guaranteed,
        }


def verify_trace(g: Graph, trace: ReductionTrace) -> None:
    """Independent certificate check: the final matching is a valid UR
    matching of g, meets the rounded-up guarantee when guaranteed, and
    equals the union of the per-step lifted edges."""
    check_matching(g, trace.final_matching)
    ok, _ = is_uniquely_restricted_fast(g, trace.final_matching)
    if not ok:
        raise CertificationError("final matching is not uniquely restricted")
    lifted = {e for s in trace.steps for e in s.lifted_edges}
    if lifted != set(trace.final_matching):
        raise CertificationError("step lifted edges do not reproduce the final matching")
    if trace.guaranteed and len(trace.final_matching) < math.ceil(trace.guarantee):
        raise CertificationError(
            f"matching size {len(trace.final_matching)} below guarantee {trace.guarantee}"
        )
    for s in trace.steps:
        if s.rule == RULE_MIN_DEGREE_PEEL:
            delta_step = s.bookkeeping["min_degree"]
            cap = s.bookkeeping["delta"]
            if not delta_step * s.bookkeeping["isolated"] <= s.bookkeeping["e_u"] <= delta_step * (cap - 1):
                raise CertificationError(f"peel step violates degree-count inequality: {s.bookkeeping}")


def _certify(h: Graph, matching: Iterable[Edge], rule: str) -> None:
    m = frozenset(matching)
    check_matching(h, m)
    ok, _ = is_uniquely_restricted_fast(h, m, validate=False)
    if not ok:
        raise CertificationError(f"lift for rule {rule} produced a non-UR matching")


def _rewrite_steps(steps: list[ReductionStep], vmap: dict[int, object]) -> None:
    """Rename step vertex data from child labels to parent labels; a super
    vertex maps to the tuple of parent vertices it merged.  Lifted edges are
    not touched here — they are resolved exactly through the edge map of the
    enclosing lift."""

    def ref(x: int) -> tuple[int, ...]:
        t = vmap[x]
        return t if isinstance(t, tuple) else (t,)

    for s in steps:
        s.removed = tuple(sorted({p for x in s.removed for p in ref(x)}))
        if s.added_aux_edges:
            new_aux = []
            for e in s.added_aux_edges:
                ru, rv = ref(e.u), ref(e.v)
                if len(ru) > 1 or len(rv) > 1:
                    s.bookkeeping.setdefault("aux_groups", []).append(
                        [sorted(ru), sorted(rv)]
                    )
                new_aux.append(Edge(min(ru), min(rv)))
            s.added_aux_edges = tuple(new_aux)


def _map_edges(edges: Iterable[Edge], emap: dict[Edge, Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(emap[e] for e in edges))


def _components_excluding(h: Graph, removed: set[int]) -> list[set[int]]:
    seen = set(removed)
    blocks: list[set[int]] = []
    for s in range(h.vertex_count):
        if s in seen:
            continue
        block = {s}
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in h.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    block.add(y)
                    stack.append(y)
        blocks.append(block)
    return blocks


def _bfs_path(h: Graph, s: int, t: int, avoid: set[int]) -> list[int] | None:
    """Shortest s..t path avoiding a vertex set; None if disconnected."""
    if s == t:
        return [s]
    prev = {s: -1}
    queue = [s]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in h.adjacency[x]:
            if y in avoid or y in prev:
                continue
            prev[y] = x
            if y == t:
                path = [t]
                while path[-1] != s:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            queue.append(y)
    return None


# ---------------------------------------------------------------------------
# Theorem: n/D - m/D^2 for graphs without isolated vertices


def construct_theorem1(g: Graph, delta: int) -> ReductionTrace:
    """Min-degree peeling: match a minimum-degree vertex to a neighbor,
    remove its closed neighborhood plus newly isolated vertices, recurse."""
    if delta < 1:
        raise GraphError(f"delta must be positive, got {delta}")
    if g.vertex_count:
        profile = degree_profile(g)
        if profile.isolated_count:
            raise GraphError("graph has isolated vertices")
        if profile.max_degree > delta:
            raise GraphError(f"max degree {profile.max_degree} exceeds delta {delta}")
    guarantee = Fraction(g.vertex_count, delta) - Fraction(g.edge_count, delta * delta)
    cur = g
    to_orig = {v: v for v in range(g.vertex_count)}
    matching: set[Edge] = set()
    steps: list[ReductionStep] = []
    while cur.vertex_count:
        degs = cur.degrees()
        dmin = min(degs)
        u = degs.index(dmin)
        v = cur.adjacency[u][0]
        closed = {u, *cur.adjacency[u]}
        neigh = set(cur.adjacency[u])
        e_u = sum(
            1 for e in cur.edges() if u not in e and (e.u in neigh or e.v in neigh)
        )
        after, rel1 = delete_vertices(cur, closed)
        isolated = {x for x in range(after.vertex_count) if after.degree(x) == 0}
        inv1 = {new: old for old, new in rel1.items()}
        removed = closed | {inv1[x] for x in isolated}
        matching.add(Edge(to_orig[u], to_orig[v]))
        steps.append(
            ReductionStep(
                RULE_MIN_DEGREE_PEEL,
                tuple(sorted(to_orig[x] for x in removed)),
                (Edge(to_orig[u], to_orig[v]),),
                bookkeeping={
                    "min_degree": dmin,
                    "delta": delta,
                    "isolated": len(isolated),
                    "e_u": e_u,
                },
            )
        )
        _certify(g, matching, RULE_MIN_DEGREE_PEEL)
        nxt, rel2 = delete_vertices(after, isolated)
        to_orig = {
            rel2[x]: to_orig[inv1[x]]
            for x in range(after.vertex_count)
            if x not in isolated
        }
        cur = nxt
    trace = ReductionTrace(steps, frozenset(matching), guarantee, True)
    verify_trace(g, trace)
    return trace


# ---------------------------------------------------------------------------
# Theorem: (n-c)/2 - m/6 for subcubic graphs


def construct_theorem2(
    g: Graph, *, solver_guard: int = CUBIC_BASE_GUARD, budget: int = DEFAULT_BUDGET
) -> ReductionTrace:
    """Subcubic reduction engine following the degree-based case analysis;
    cubic components fall through to the exact solver (or a greedy maximal
    UR matching beyond the guard, flagged unguaranteed)."""
    if g.vertex_count and degree_profile(g).max_degree > 3:
        raise GraphError("graph is not subcubic")
    c = len(components(g)) if g.vertex_count else 0
    guarantee = Fraction(g.vertex_count - c, 2) - Fraction(g.edge_count, 6)
    matching, steps, guaranteed = _t2_components(g, solver_guard, budget)
    trace = ReductionTrace(steps, frozenset(matching), guarantee, guaranteed)
    verify_trace(g, trace)
    return trace


def _t2_components(
    h: Graph, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    if h.vertex_count == 0:
        return set(), [], True
    comps = components(h)
    if len(comps) == 1:
        return _t2_connected(h, guard, budget)
    matching: set[Edge] = set()
    steps: list[ReductionStep] = []
    ok = True
    for comp in comps:
        sub, rel = delete_vertices(h, set(range(h.vertex_count)) - set(comp))
        inv = {new: old for old, new in rel.items()}
        m_c, s_c, ok_c = _t2_connected(sub, guard, budget)
        emap = {e: Edge(inv[e.u], inv[e.v]) for e in m_c}
        matching |= set(emap.values())
        for s in s_c:
            s.lifted_edges = _map_edges(s.lifted_edges, emap)
        _rewrite_steps(s_c, inv)
        steps.extend(s_c)
        ok = ok and ok_c
    return matching, steps, ok


def _t2_lift_plain(
    h: Graph,
    remove: set[int],
    lift_pairs: list[tuple[int, int]],
    rule: str,
    bookkeeping: dict,
    guard: int,
    budget: int,
) -> tuple[set[Edge], list[ReductionStep], bool]:
    child, rel = delete_vertices(h, remove)
    inv = {new: old for old, new in rel.items()}
    m_child, steps_child, ok = _t2_components(child, guard, budget)
    emap = {e: Edge(inv[e.u], inv[e.v]) for e in m_child}
    matching = set(emap.values())
    for s in steps_child:
        s.lifted_edges = _map_edges(s.lifted_edges, emap)
    _rewrite_steps(steps_child, inv)
    lifted = tuple(sorted(Edge(a, b) for a, b in lift_pairs))
    matching |= set(lifted)
    step = ReductionStep(rule, tuple(sorted(remove)), lifted, bookkeeping=bookkeeping)
    _certify(h, matching, rule)
    return matching, [step] + steps_child, ok


def _t2_connected(
    h: Graph, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    n = h.vertex_count
    if n == 1:
        return set(), [], True
    degs = h.degrees()

    ones = [v for v in range(n) if degs[v] <= 1]
    if ones:
        u = ones[0]
        v = h.adjacency[u][0]
        return _t2_lift_plain(
            h, {u, v}, [(u, v)], RULE_DEG1, {"pivot_degree": degs[u]}, guard, budget
        )

    twos = [v for v in range(n) if degs[v] == 2]
    if not twos:
        return _t2_cubic_base(h, guard, budget)

    # adjacent degree-2 pair
    for u in twos:
        nbrs2 = [y for y in h.adjacency[u] if degs[y] == 2]
        if nbrs2:
            return _t2_claim2(h, u, nbrs2[0], guard, budget)
    # degree-2 vertex in a triangle
    for u in twos:
        a, b = h.adjacency[u]
        if h.has_edge(a, b):
            return _t2_claim3(h, u, guard, budget)
    # degree-2 vertex on a 4-cycle
    for u in twos:
        a, b = h.adjacency[u]
        common = (set(h.adjacency[a]) & set(h.adjacency[b])) - {u}
        if common:
            return _t2_claim4(h, u, min(common), guard, budget)
    return _t2_claim56(h, twos[0], guard, budget)


def _t2_claim2(
    h: Graph, u: int, v: int, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    degs = h.degrees()
    triangle = bool(set(h.adjacency[u]) & set(h.adjacency[v]))
    w = next(y for y in h.adjacency[u] if y != v)
    path = None if triangle else _bfs_path(h, v, w, {u})
    if triangle or path is None:
        return _t2_lift_plain(
            h,
            {u, v},
            [(u, v)],
            RULE_DEG2_ADJ_BRIDGE_OR_TRIANGLE,
            {"triangle": triangle},
            guard,
            budget,
        )
    comps = _components_excluding(h, {u, v, w})
    if len(comps) == 1:
        return _t2_lift_plain(
            h, {u, v, w}, [(u, v)], RULE_DEG2_ADJ_CYCLE, {"components": 1}, guard, budget
        )
    if len(comps) != 2 or degs[w] != 3:
        raise CertificationError(
            f"claim-2 cycle case expects 2 components and cubic w, got {len(comps)}, deg {degs[w]}"
        )
    interior = set(path[1:-1])
    comp_c = next(c for c in comps if interior & c)
    x = min(y for y in h.adjacency[w] if y != u and y not in comp_c)
    return _t2_lift_plain(
        h,
        {u, v, w, x},
        [(u, v), (w, x)],
        RULE_DEG2_ADJ_CYCLE,
        {"components": 2, "cycle_length": len(path) + 1},
        guard,
        budget,
    )


def _t2_claim3(
    h: Graph, u: int, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    v, w = sorted(h.adjacency[u])
    comps = _components_excluding(h, {u, v})
    if len(comps) == 2:
        return _t2_lift_plain(
            h, {u, v}, [(u, v)], RULE_DEG2_TRIANGLE, {"components": 2}, guard, budget
        )
    return _t2_lift_plain(
        h, {u, v, w}, [(u, v)], RULE_DEG2_TRIANGLE, {"components": 1}, guard, budget
    )


def _t2_claim4(
    h: Graph, u: int, x: int, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    v, w = sorted(h.adjacency[u])
    comps = _components_excluding(h, {u, v, w})
    if len(comps) <= 2:
        return _t2_lift_plain(
            h,
            {u, v, w},
            [(u, v)],
            RULE_DEG2_C4_CONTRACT,
            {"contracted": False, "components": len(comps)},
            guard,
            budget,
        )
    cset = {u, v, x, w}
    child, rel = contract_set(h, cset)
    super_id = child.vertex_count - 1
    m_child, steps_child, ok = _t2_components(child, guard, budget)
    matching, emap = _resolve_contraction(h, cset, rel, m_child, prefer=[x, w, v])
    covered = {p for e in matching for p in e}
    mate = w if v in covered else v
    for s in steps_child:
        s.lifted_edges = _map_edges(s.lifted_edges, emap)
    vmap: dict[int, object] = {new: old for old, new in rel.items() if old not in cset}
    vmap[super_id] = tuple(sorted(cset))
    _rewrite_steps(steps_child, vmap)
    lifted = (Edge(u, mate),)
    matching.add(Edge(u, mate))
    step = ReductionStep(
        RULE_DEG2_C4_CONTRACT,
        tuple(sorted(cset)),
        lifted,
        bookkeeping={"contracted": True, "components": len(comps)},
    )
    _certify(h, matching, RULE_DEG2_C4_CONTRACT)
    return matching, [step] + steps_child, ok


def _t2_claim56(
    h: Graph, u: int, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    v, w = sorted(h.adjacency[u])
    ncomps = _components_excluding(h, {u, v, w})
    if len(ncomps) == 4:
        return _t2_claim6(h, u, v, w, guard, budget)
    path = _bfs_path(h, v, w, {u})
    if path is None:
        # both edges at u are bridges; peel the side whose remaining
        # neighbors stay together
        for cand in (v, w):
            others = [t for t in h.adjacency[cand] if t != u]
            if any(set(others) <= c for c in ncomps):
                return _t2_lift_plain(
                    h,
                    {u, cand},
                    [(u, cand)],
                    RULE_DEG2_FEW_COMPONENTS,
                    {"mode": "bridge", "components": len(ncomps)},
                    guard,
                    budget,
                )
        raise CertificationError("claim-5 bridge case found no splittable neighbor")
    interior = set(path[1:-1])
    comp_h = next(c for c in ncomps if interior & c)
    sset = {u, v, w} | comp_h
    child, rel = contract_set(h, sset)
    super_id = child.vertex_count - 1
    m_child, steps_child, ok = _t2_components(child, guard, budget)
    matching, emap = _resolve_contraction(h, sset, rel, m_child, prefer=[w, v])
    covered = {p for e in matching for p in e}
    mate = w if v in covered else v
    for s in steps_child:
        s.lifted_edges = _map_edges(s.lifted_edges, emap)
    vmap: dict[int, object] = {new: old for old, new in rel.items() if old not in sset}
    vmap[super_id] = tuple(sorted(sset))
    _rewrite_steps(steps_child, vmap)
    # solve the cycle component H separately and merge
    sub_h, rel_h = delete_vertices(h, set(range(h.vertex_count)) - comp_h)
    inv_h = {new: old for old, new in rel_h.items()}
    m_h, steps_h, ok_h = _t2_components(sub_h, guard, budget)
    emap_h = {e: Edge(inv_h[e.u], inv_h[e.v]) for e in m_h}
    for s in steps_h:
        s.lifted_edges = _map_edges(s.lifted_edges, emap_h)
    _rewrite_steps(steps_h, inv_h)
    matching |= set(emap_h.values())
    matching.add(Edge(u, mate))
    step = ReductionStep(
        RULE_DEG2_FEW_COMPONENTS,
        tuple(sorted({u, v, w})),
        (Edge(u, mate),),
        bookkeeping={
            "mode": "contract",
            "components": len(ncomps),
            "cycle_component_order": len(comp_h),
        },
    )
    _certify(h, matching, RULE_DEG2_FEW_COMPONENTS)
    return matching, [step] + steps_child + steps_h, ok and ok_h


def _t2_claim6(
    h: Graph, u: int, v: int, w: int, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    x = min(t for t in h.adjacency[v] if t != u)
    base, rel = delete_vertices(h, {u, v})
    aux = Edge(rel[w], rel[x])
    child = Graph.from_edges(base.vertex_count, [tuple(e) for e in base.edges()] + [tuple(aux)])
    inv = {new: old for old, new in rel.items()}
    m_child, steps_child, ok = _t2_components(child, guard, budget)
    emap = {e: Edge(inv[e.u], inv[e.v]) for e in m_child}
    aux_used = aux in m_child
    if aux_used:
        matching = {emap[e] for e in m_child if e != aux}
        lifted = (Edge(u, w), Edge(v, x))
        for s in steps_child:
            if aux in s.lifted_edges:
                s.lifted_edges = tuple(e for e in s.lifted_edges if e != aux)
                s.bookkeeping["spliced_out"] = f"{w}-{x}"
    else:
        matching = set(emap.values())
        lifted = (Edge(u, v),)
    for s in steps_child:
        s.lifted_edges = _map_edges(s.lifted_edges, emap)
    _rewrite_steps(steps_child, inv)
    matching |= set(lifted)
    step = ReductionStep(
        RULE_DEG2_EDGE_SPLICE,
        (u, v),
        tuple(sorted(lifted)),
        added_aux_edges=(Edge(w, x),),
        bookkeeping={"aux_used": aux_used},
    )
    _certify(h, matching, RULE_DEG2_EDGE_SPLICE)
    return matching, [step] + steps_child, ok


def _resolve_contraction(
    h: Graph,
    merged: set[int],
    rel: dict[int, int],
    m_child: set[Edge] | frozenset,
    prefer: list[int],
) -> tuple[set[Edge], dict[Edge, Edge]]:
    """Map a child matching back through a contraction; the at-most-one edge
    at the merged vertex resolves to a concrete endpoint by preference."""
    super_id = max(rel.values())
    inv = {new: old for old, new in rel.items() if old not in merged}
    matching: set[Edge] = set()
    emap: dict[Edge, Edge] = {}
    for e in m_child:
        if super_id in e:
            other = e.v if e.u == super_id else e.u
            y = inv[other]
            cands = [z for z in prefer if h.has_edge(y, z)]
            if not cands:
                cands = sorted(z for z in merged if h.has_edge(y, z))
            if not cands:
                raise CertificationError("contracted matching edge has no concrete endpoint")
            parent = Edge(y, cands[0])
        else:
            parent = Edge(inv[e.u], inv[e.v])
        matching.add(parent)
        emap[e] = parent
    return matching, emap


def _t2_cubic_base(
    h: Graph, guard: int, budget: int
) -> tuple[set[Edge], list[ReductionStep], bool]:
    if h.vertex_count <= guard:
        res = nu_ur_exact(h, budget)
        matching = set(res.witness)
        bound = Fraction(h.vertex_count - 1, 2) - Fraction(h.edge_count, 6)
        okay = res.optimal or len(matching) >= math.ceil(bound)
        book = {"order": h.vertex_count, "exact": True, "optimal": res.optimal}
    else:
        matching = _greedy_ur(h)
        okay = False
        book = {"order": h.vertex_count, "exact": False}
    step = ReductionStep(
        RULE_CUBIC_BASE, tuple(range(h.vertex_count)), tuple(sorted(matching)), bookkeeping=book
    )
    _certify(h, matching, RULE_CUBIC_BASE)
    return matching, [step], okay


def _greedy_ur(h: Graph) -> set[Edge]:
    matching: set[Edge] = set()
    covered: set[int] = set()
    for e in sorted(h.edges()):
        if e.u in covered or e.v in covered:
            continue
        trial = frozenset(matching | {e})
        if is_uniquely_restricted_fast(h, trial, validate=False)[0]:
            matching.add(e)
            covered.update(e)
    return matching


# ---------------------------------------------------------------------------
# Theorem: (n-c)/D for girth >= 5 and D >= 4


def construct_theorem3(g: Graph, delta: int) -> ReductionTrace:
    """Girth-5 engine: degree-1 pair removal, degree-2 maximal path peeling,
    spanning-tree endvertex drop for regular components, min-degree peel
    otherwise."""
    if delta < 4:
        raise GraphError(f"delta must be at least 4, got {delta}")
    if g.vertex_count:
        profile = degree_profile(g)
        if profile.max_degree > delta:
            raise GraphError(f"max degree {profile.max_degree} exceeds delta {delta}")
    if girth(g) < 5:
        raise GraphError("girth below 5")
    c = len(components(g)) if g.vertex_count else 0
    guarantee = Fraction(g.vertex_count - c, delta)
    matching, steps = _t3_components(g, delta)
    trace = ReductionTrace(steps, frozenset(matching), guarantee, True)
    verify_trace(g, trace)
    return trace


def _t3_components(h: Graph, delta: int) -> tuple[set[Edge], list[ReductionStep]]:
    if h.vertex_count == 0:
        return set(), []
    comps = components(h)
    if len(comps) == 1:
        return _t3_connected(h, delta)
    matching: set[Edge] = set()
    steps: list[ReductionStep] = []
    for comp in comps:
        sub, rel = delete_vertices(h, set(range(h.vertex_count)) - set(comp))
        inv = {new: old for old, new in rel.items()}
        m_c, s_c = _t3_connected(sub, delta)
        emap = {e: Edge(inv[e.u], inv[e.v]) for e in m_c}
        matching |= set(emap.values())
        for s in s_c:
            s.lifted_edges = _map_edges(s.lifted_edges, emap)
        _rewrite_steps(s_c, inv)
        steps.extend(s_c)
    return matching, steps


def _t3_lift(
    h: Graph,
    remove: set[int],
    lift_pairs: list[tuple[int, int]],
    rule: str,
    bookkeeping: dict,
    delta: int,
) -> tuple[set[Edge], list[ReductionStep]]:
    child, rel = delete_vertices(h, remove)
    inv = {new: old for old, new in rel.items()}
    m_child, steps_child = _t3_components(child, delta)
    emap = {e: Edge(inv[e.u], inv[e.v]) for e in m_child}
    matching = set(emap.values())
    for s in steps_child:
        s.lifted_edges = _map_edges(s.lifted_edges, emap)
    _rewrite_steps(steps_child, inv)
    lifted = tuple(sorted(Edge(a, b) for a, b in lift_pairs))
    matching |= set(lifted)
    step = ReductionStep(rule, tuple(sorted(remove)), lifted, bookkeeping=bookkeeping)
    if lifted:
        _certify(h, matching, rule)
    return matching, [step] + steps_child


def _t3_connected(h: Graph, delta: int) -> tuple[set[Edge], list[ReductionStep]]:
    n = h.vertex_count
    if n == 1:
        return set(), []
    degs = h.degrees()

    ones = [v for v in range(n) if degs[v] <= 1]
    if ones:
        u = ones[0]
        v = h.adjacency[u][0]
        return _t3_lift(h, {u, v}, [(u, v)], RULE_DEG1, {}, delta)

    if any(d == 2 for d in degs):
        path = _maximal_degree2_path(h, degs)
        lifts = [(path[i], path[i + 1]) for i in range(1, len(path) - 1, 2)]
        return _t3_lift(
            h,
            set(path),
            lifts,
            RULE_DEG2_PATH_PEEL,
            {"path_order": len(path)},
            delta,
        )

    if all(d == delta for d in degs):
        u = spanning_tree_endvertex(h)
        return _t3_lift(h, {u}, [], RULE_REGULAR_VERTEX_DROP, {"dropped": u}, delta)

    dmin = min(degs)
    u = degs.index(dmin)
    v = h.adjacency[u][0]
    closed = {u, *h.adjacency[u]}
    return _t3_lift(
        h, closed, [(u, v)], RULE_MIN_DEG_PEEL_GIRTH5, {"min_degree": dmin}, delta
    )


def _maximal_degree2_path(h: Graph, degs: tuple[int, ...]) -> list[int]:
    """Path u1 v1 u2 ... u_k whose internal odd-position vertices all have
    degree 2, extended greedily at both ends until maximal."""
    v0 = next(v for v in range(h.vertex_count) if degs[v] == 2)
    a, b = h.adjacency[v0]
    path = [a, v0, b]
    in_path = set(path)

    def try_extend(end: int) -> tuple[int, int] | None:
        for y in h.adjacency[end]:
            if y in in_path or degs[y] != 2:
                continue
            z = next(t for t in h.adjacency[y] if t != end)
            if z not in in_path:
                return y, z
        return None

    while True:
        ext = try_extend(path[-1])
        if ext is None:
            break
        path.extend(ext)
        in_path.update(ext)
    while True:
        ext = try_extend(path[0])
        if ext is None:
            break
        path[:0] = [ext[1], ext[0]]
        in_path.update(ext)
    return path
