"""Uniquely restricted and acyclic matchings in bounded-degree graphs:
exact solvers, certified constructive lower bounds, and an audit harness.
"""

from .graph import (
    DegreeProfile,
    Edge,
    Graph,
    GraphError,
    components,
    contract_set,
    degree_profile,
    delete_vertices,
    girth,
    is_connected,
    spanning_tree_endvertex,
)
from .graph6 import FormatError, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .generators import (
    GenerationError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_labeled_graphs,
    gk_gadget,
    path_graph,
    petersen_graph,
    random_forest,
    random_graph,
    robertson_graph,
)
from .matchings import (
    GuardError,
    Matching,
    MatchingError,
    check_matching,
    covered_vertices,
    enumerate_matchings,
    enumerate_maximum_matchings,
    has_alternating_cycle,
    is_acyclic_matching,
    is_uniquely_restricted_fast,
    is_uniquely_restricted_oracle,
    matching_from_json,
    matching_from_pairs,
    matching_to_pairs,
    partition_into_acyclic,
    partition_into_acyclic_exhaustive,
    validate_alternating_cycle,
)
from .solvers import SolveResult, max_matching, nu_ac_exact, nu_ur_exact
from .constructive import (
    CertificationError,
    ReductionStep,
    ReductionTrace,
    construct_theorem1,
    construct_theorem2,
    construct_theorem3,
    verify_trace,
)
from .audit import (
    AuditRecord,
    AuditReport,
    ConjectureStats,
    audit_corpus,
    audit_graph,
    conjecture1_scan,
    conjecture2_scan,
    enumerate_connected_graph6,
    is_extremal_family,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
