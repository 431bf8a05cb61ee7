"""Exact tools for graphs critical for connected domination.

The package computes invariants (independence, clique, connectivity,
domination numbers) exactly on graphs of up to 64 vertices, decides edge-
and vertex-criticality for the connected domination number, constructs the
known extremal families, and machine-checks the structural results about
them over exhaustively enumerated small graphs.
"""

from .criticality import (
    CriticalityReport,
    LemmaReport,
    is_k_gc_edge_critical,
    is_k_gc_vertex_critical,
    is_k_gt_edge_critical,
    is_maximal_k_gc_vertex_critical,
    verify_cutset_lemmas,
    verify_duv_lemma,
    verify_dv_lemma,
    verify_ordering_lemma,
)
from .domination import (
    DominationResult,
    all_gamma_c_sets,
    dominates,
    gamma_c,
    gamma_t,
    is_connected_dominating,
)
from .enumeration import enumerate_connected, enumerate_graphs, read_graph6_lines
from .errors import CapacityError, Graph6ParseError
from .generators import (
    G2Params,
    are_isomorphic,
    complete,
    cycle,
    gen_g1,
    gen_g2,
    gen_g3,
    gen_lemma_c1,
    is_in_class_g1,
    path,
)
from .graph import (
    Graph,
    add_edge,
    complement,
    connected_components,
    delete_vertex,
    empty_graph,
    from_graph6,
    induced_subgraph,
    is_connected,
    join,
    min_degree,
    non_edges,
    to_graph6,
)
from .hamiltonicity import hamiltonian_path_between, is_hamiltonian_connected
from .invariants import (
    InvariantRecord,
    clique_number,
    compute_invariants,
    independence_number,
    is_clique,
    is_independent_set,
    minimum_cut_sets,
    vertex_connectivity,
)
from .theorems import (
    THEOREM_IDS,
    GraphProfile,
    TheoremReport,
    check_theorem,
    explore_conjecture,
    find_critical,
    profile_graph,
    profile_stream,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CriticalityReport",
    "DominationResult",
    "G2Params",
    "Graph",
    "Graph6ParseError",
    "GraphProfile",
    "InvariantRecord",
    "LemmaReport",
    "THEOREM_IDS",
    "TheoremReport",
    "add_edge",
    "all_gamma_c_sets",
    "are_isomorphic",
    "check_theorem",
    "clique_number",
    "complement",
    "complete",
    "compute_invariants",
    "connected_components",
    "cycle",
    "delete_vertex",
    "dominates",
    "empty_graph",
    "enumerate_connected",
    "enumerate_graphs",
    "explore_conjecture",
    "find_critical",
    "from_graph6",
    "gamma_c",
    "gamma_t",
    "gen_g1",
    "gen_g2",
    "gen_g3",
    "gen_lemma_c1",
    "hamiltonian_path_between",
    "independence_number",
    "induced_subgraph",
    "is_clique",
    "is_connected",
    "is_connected_dominating",
    "is_hamiltonian_connected",
    "is_in_class_g1",
    "is_independent_set",
    "is_k_gc_edge_critical",
    "is_k_gc_vertex_critical",
    "is_k_gt_edge_critical",
    "is_maximal_k_gc_vertex_critical",
    "join",
    "min_degree",
    "minimum_cut_sets",
    "non_edges",
    "path",
    "profile_graph",
    "profile_stream",
    "read_graph6_lines",
    "to_graph6",
    "verify_cutset_lemmas",
    "verify_duv_lemma",
    "verify_dv_lemma",
    "verify_ordering_lemma",
    "vertex_connectivity",
]
