"""Corpus-level verification of every displayed bound, plus experimental
conjecture scans.

Each graph becomes one AuditRecord of invariants, exact optima (under a
size threshold), rational bound values, and a violation list.  A violation
carries the graph6 reproducer; any violation makes the report fail.  All
bound arithmetic uses exact rationals, never floats, and reports are
byte-deterministic for a fixed corpus and configuration.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .constructive import (
    CertificationError,
    construct_theorem1,
    construct_theorem2,
    construct_theorem3,
    verify_trace,
)
from .generators import random_graph
from .graph import Graph, components, degree_profile, girth
from .graph6 import parse_graph6, write_graph6
from .matchings import (
    GuardError,
    partition_into_acyclic,
    partition_into_acyclic_exhaustive,
)
from .solvers import DEFAULT_BUDGET, max_matching, nu_ac_exact, nu_ur_exact

DEFAULT_SOLVER_THRESHOLD = 14


def _frac_str(x: Fraction | None) -> str | None:
    if x is None:
        return None
    return f"{x.numerator}/{x.denominator}"


@dataclass
class AuditRecord:
    graph_id: str
    n: int
    m: int
    c: int
    max_degree: int
    min_degree: int
    girth: int | None  # None encodes an acyclic graph (infinite girth)
    nu: int | None
    nu_ur: int | None
    nu_ac: int | None
    bound_thm1: Fraction | None
    bound_thm2: Fraction | None
    bound_thm3: Fraction | None
    bound_mdelta2: Fraction | None
    bound_nu_over_delta: Fraction | None
    bound_ac_upper: Fraction | None
    thm1_equality: bool | None
    is_extremal_family: bool | None
    violations: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "c": self.c,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "girth": self.girth,
            "nu": self.nu,
            "nu_ur": self.nu_ur,
            "nu_ac": self.nu_ac,
            "bound_thm1": _frac_str(self.bound_thm1),
            "bound_thm2": _frac_str(self.bound_thm2),
            "bound_thm3": _frac_str(self.bound_thm3),
            "bound_mdelta2": _frac_str(self.bound_mdelta2),
            "bound_nu_over_delta": _frac_str(self.bound_nu_over_delta),
            "bound_ac_upper": _frac_str(self.bound_ac_upper),
            "thm1_equality": self.thm1_equality,
            "is_extremal_family": self.is_extremal_family,
            "violations": list(self.violations),
        }


CSV_COLUMNS = [
    "graph_id", "n", "m", "c", "max_degree", "min_degree", "girth",
    "nu", "nu_ur", "nu_ac",
    "bound_thm1", "bound_thm2", "bound_thm3", "bound_mdelta2",
    "bound_nu_over_delta", "bound_ac_upper",
    "thm1_equality", "is_extremal_family", "violations",
]


def is_extremal_family(g: Graph, delta: int) -> bool:
    """True iff every component is a complete bipartite K_{delta,r} with
    1 <= r <= delta."""
    for comp in components(g):
        if not _is_kdr(g, comp, delta):
            return False
    return g.vertex_count > 0


def _is_kdr(g: Graph, comp: list[int], delta: int) -> bool:
    if len(comp) < 2:
        return False
    inside = set(comp)
    color = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in color:
                color[y] = 1 - color[x]
                stack.append(y)
            elif color[y] == color[x]:
                return False
    side0 = [v for v in comp if color[v] == 0]
    side1 = [v for v in comp if color[v] == 1]
    for u in side0:
        if set(g.adjacency[u]) & inside != set(side1):
            return False
    sizes = sorted((len(side0), len(side1)))
    return delta in sizes and 1 <= sizes[0] <= delta and sizes[1] == delta


def audit_graph(
    g: Graph,
    *,
    solver_threshold: int = DEFAULT_SOLVER_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
) -> AuditRecord:
    """Compute invariants and check every applicable bound; checks needing
    unknown optima are skipped, not failed."""
    gid = write_graph6(g)
    n, m = g.vertex_count, g.edge_count
    comps = components(g)
    c = len(comps)
    profile = degree_profile(g) if n else None
    maxdeg = profile.max_degree if profile else 0
    mindeg = profile.min_degree if profile else 0
    gr = girth(g)
    gr_val = None if gr == math.inf else int(gr)

    violations: list[str] = []

    def violate(msg: str) -> None:
        violations.append(f"{msg} [reproducer {gid}]")

    nu = nu_ur = nu_ac = None
    if n <= solver_threshold:
        nu = max_matching(g).value
        res_ur = nu_ur_exact(g, budget)
        res_ac = nu_ac_exact(g, budget)
        if res_ur.optimal:
            nu_ur = res_ur.value
        if res_ac.optimal:
            nu_ac = res_ac.value

    delta = maxdeg
    bound_thm1 = bound_mdelta2 = bound_nu_over_delta = bound_ac_upper = None
    thm1_eq = extremal = None
    if delta >= 1:
        bound_mdelta2 = Fraction(m, delta * delta)
        if profile and profile.isolated_count == 0:
            bound_thm1 = Fraction(n, delta) - Fraction(m, delta * delta)
        if nu is not None:
            bound_nu_over_delta = Fraction(nu, delta)
        if delta >= 2 and mindeg == maxdeg:
            bound_ac_upper = Fraction(delta * n - 2, 4 * delta - 4)

    bound_thm2 = Fraction(n - c, 2) - Fraction(m, 6) if n and maxdeg <= 3 else None
    delta3 = max(delta, 4)
    bound_thm3 = Fraction(n - c, delta3) if n and gr >= 5 else None

    if nu is not None and nu_ur is not None and not nu >= nu_ur:
        violate(f"nu {nu} < nu_ur {nu_ur}")
    if nu_ur is not None and nu_ac is not None and not nu_ur >= nu_ac:
        violate(f"nu_ur {nu_ur} < nu_ac {nu_ac}")
    if bound_thm1 is not None and nu_ur is not None:
        if nu_ur < bound_thm1:
            violate(f"thm1 bound {bound_thm1} exceeds nu_ur {nu_ur}")
        thm1_eq = Fraction(nu_ur) == bound_thm1
        extremal = is_extremal_family(g, delta)
        if thm1_eq != extremal:
            violate(
                f"thm1 equality {thm1_eq} does not match extremal family {extremal}"
            )
    if bound_thm2 is not None and nu_ur is not None and nu_ur < bound_thm2:
        violate(f"thm2 bound {bound_thm2} exceeds nu_ur {nu_ur}")
    if bound_thm3 is not None and nu_ur is not None and nu_ur < bound_thm3:
        violate(f"thm3 bound {bound_thm3} exceeds nu_ur {nu_ur}")
    if bound_mdelta2 is not None and nu_ac is not None and nu_ac < bound_mdelta2:
        violate(f"m/delta^2 bound {bound_mdelta2} exceeds nu_ac {nu_ac}")
    if bound_nu_over_delta is not None and nu_ac is not None:
        if nu_ac < bound_nu_over_delta:
            violate(f"nu/delta bound {bound_nu_over_delta} exceeds nu_ac {nu_ac}")
    if bound_ac_upper is not None and nu_ac is not None and nu_ac > bound_ac_upper:
        violate(f"nu_ac {nu_ac} exceeds regular upper bound {bound_ac_upper}")
    if maxdeg <= 3 and c == 1 and n >= 1 and nu_ur is not None:
        if Fraction(nu_ur) < Fraction(n - 2, 4):
            violate(f"subcubic base bound (n-2)/4 exceeds nu_ur {nu_ur}")

    # constructive traces must meet their guarantees
    try:
        if profile and profile.isolated_count == 0 and delta >= 1:
            verify_trace(g, construct_theorem1(g, delta))
        if n and maxdeg <= 3:
            trace2 = construct_theorem2(g)
            verify_trace(g, trace2)
            if nu_ur is not None and trace2.guaranteed:
                if len(trace2.final_matching) > nu_ur:
                    violate("thm2 constructor exceeded exact nu_ur")
        if n and gr >= 5:
            verify_trace(g, construct_theorem3(g, delta3))
    except CertificationError as exc:
        violate(f"constructive certification failed: {exc}")

    return AuditRecord(
        graph_id=gid,
        n=n,
        m=m,
        c=c,
        max_degree=maxdeg,
        min_degree=mindeg,
        girth=gr_val,
        nu=nu,
        nu_ur=nu_ur,
        nu_ac=nu_ac,
        bound_thm1=bound_thm1,
        bound_thm2=bound_thm2,
        bound_thm3=bound_thm3,
        bound_mdelta2=bound_mdelta2,
        bound_nu_over_delta=bound_nu_over_delta,
        bound_ac_upper=bound_ac_upper,
        thm1_equality=thm1_eq,
        is_extremal_family=extremal,
        violations=violations,
    )


@dataclass
class AuditReport:
    header: dict
    records: list[AuditRecord]
    input_errors: list[str]

    @property
    def violation_count(self) -> int:
        return sum(len(r.violations) for r in self.records)

    def exit_code(self, strict: bool = False) -> int:
        if strict and self.input_errors:
            return 2
        return 1 if self.violation_count else 0

    def to_json(self) -> str:
        payload = {
            "header": self.header,
            "records": [r.to_json_dict() for r in self.records],
            "input_errors": list(self.input_errors),
            "violation_count": self.violation_count,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in self.records:
            row = r.to_json_dict()
            row["violations"] = ";".join(r.violations)
            writer.writerow({k: row[k] for k in CSV_COLUMNS})
        return out.getvalue()


def audit_corpus(
    lines: Iterable[str],
    *,
    solver_threshold: int = DEFAULT_SOLVER_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
    strict: bool = False,
    jobs: int = 1,
) -> AuditReport:
    """Audit a stream of graph6 lines; per-line parse failures are recorded
    and skipped unless strict."""
    graphs: list[Graph] = []
    errors: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            graphs.append(parse_graph6(text))
        except Exception as exc:
            errors.append(f"line {lineno}: {exc}")
            if strict:
                break
    header = {
        "tool": "urmatch-audit",
        "solver_threshold": solver_threshold,
        "budget": budget,
        "strict": strict,
    }
    if jobs > 1 and len(graphs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        worker = partial(audit_graph, solver_threshold=solver_threshold, budget=budget)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(worker, graphs, chunksize=16))
    else:
        records = [
            audit_graph(g, solver_threshold=solver_threshold, budget=budget)
            for g in graphs
        ]
    return AuditReport(header, records, errors)


@dataclass
class ConjectureStats:
    girth_bucket: int
    delta: int
    samples: int
    min_ratio: Fraction | None
    mean_ratio: Fraction | None
    counterexample: str | None = None
    inconclusive: int = 0
    notes: str = ""

    def to_json_dict(self) -> dict:
        return {
            "girth_bucket": self.girth_bucket,
            "delta": self.delta,
            "samples": self.samples,
            "min_ratio": _frac_str(self.min_ratio),
            "mean_ratio": _frac_str(self.mean_ratio),
            "counterexample": self.counterexample,
            "inconclusive": self.inconclusive,
            "notes": self.notes,
        }


def conjecture2_scan(
    delta: int,
    girth_values: list[int],
    samples_per_bucket: int,
    n: int,
    seed: int,
    *,
    solver_threshold: int = DEFAULT_SOLVER_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
) -> list[ConjectureStats]:
    """nu_ur/nu ratio statistics per girth bucket; trends are reported,
    never asserted."""
    if delta < 3:
        raise ValueError(f"delta must be at least 3, got {delta}")
    out: list[ConjectureStats] = []
    for bucket_index, gmin in enumerate(girth_values):
        ratios: list[Fraction] = []
        inconclusive = 0
        notes = ""
        if n > solver_threshold:
            notes = "heuristic: n exceeds solver threshold, ratios use best-found values"
        for i in range(samples_per_bucket):
            sample_seed = seed * 1_000_003 + bucket_index * 10_007 + i
            try:
                g = random_graph(n, delta, gmin, sample_seed)
            except Exception:
                inconclusive += 1
                continue
            nu = max_matching(g).value
            if nu == 0:
                ratios.append(Fraction(1))
                continue
            res = nu_ur_exact(g, budget)
            if not res.optimal and n <= solver_threshold:
                inconclusive += 1
                continue
            ratios.append(Fraction(res.value, nu))
        stats = ConjectureStats(
            girth_bucket=gmin,
            delta=delta,
            samples=len(ratios),
            min_ratio=min(ratios) if ratios else None,
            mean_ratio=sum(ratios, Fraction(0)) / len(ratios) if ratios else None,
            inconclusive=inconclusive,
            notes=notes,
        )
        out.append(stats)
    return out


def conjecture1_scan(
    delta: int,
    samples: int,
    n: int,
    seed: int,
    *,
    partition_guard: int = 200_000,
) -> ConjectureStats:
    """Sample girth >= 7 graphs and try to split a maximum matching into
    delta-1 acyclic classes; greedy failure escalates to exhaustive search
    before anything counts as a counterexample."""
    if delta < 3:
        raise ValueError(f"delta must be at least 3, got {delta}")
    successes = 0
    attempted = 0
    inconclusive = 0
    counterexample = None
    for i in range(samples):
        g = random_graph(n, delta, 7, seed * 1_000_003 + i)
        matching = max_matching(g).witness
        attempted += 1
        classes = partition_into_acyclic(g, matching, delta - 1)
        if classes is not None:
            successes += 1
            continue
        try:
            classes = partition_into_acyclic_exhaustive(
                g, matching, delta - 1, node_guard=partition_guard
            )
        except GuardError:
            inconclusive += 1
            continue
        if classes is not None:
            successes += 1
        elif counterexample is None:
            counterexample = write_graph6(g)
    settled = attempted - inconclusive
    rate = Fraction(successes, settled) if settled else None
    return ConjectureStats(
        girth_bucket=7,
        delta=delta,
        samples=attempted,
        min_ratio=rate,
        mean_ratio=rate,
        counterexample=counterexample,
        inconclusive=inconclusive,
        notes="ratios are the confirmed partition success rate",
    )


def enumerate_connected_graph6(n_max: int) -> Iterable[str]:
    """Labeled connected graphs up to n_max vertices as graph6 lines,
    deduplicated by string; exponential, intended for n_max <= 6."""
    from .generators import enumerate_labeled_graphs

    seen: set[str] = set()
    for n in range(1, n_max + 1):
        for g in enumerate_labeled_graphs(n, connected_only=True):
            s = write_graph6(g)
            if s not in seen:
                seen.add(s)
                yield s
