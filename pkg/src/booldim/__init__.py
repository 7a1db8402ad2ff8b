"""Exact GF(2) dimension invariants of graphs, optimal star decompositions of
trees, and tournament inversion indices, each paired with an independent
brute-force oracle.

Hot kernels (rank sweeps, order searches) run in a compiled extension when
available, with a pure-Python fallback selected at import; see
kernel_backend().
"""

from ._backend import kernel_backend
from .dims import (
    DimensionReport,
    IndWitness,
    TrichotomyCase,
    boolean_dim,
    boolean_dim_oracle,
    dimension_report,
    geometric_dim,
    ind_mod2,
    is_independent_mod2,
    symplectic_dim,
)
from .errors import (
    BooldimError,
    BudgetExceededError,
    CapacityError,
    FormatError,
    NotATreeError,
)
from .f2core import F2Matrix, add_diagonal, is_alternating, rank
from .graphs import (
    CliqueFamily,
    Graph,
    boolean_sum,
    clique_graph,
    complete_graph,
    cycle_graph,
    find_duo,
    ortho_graph,
    ortho_graph_H,
    parse_edge_list,
    parse_graph6,
    path_graph,
    realize,
    validate_representation,
    write_edge_list,
    write_graph6,
)
from .tournaments import (
    InversionCertificate,
    Tournament,
    apply_inversions,
    disagreement_graph,
    embeds,
    enumerate_tournaments,
    gen_antichain_cn,
    gen_c3_sum,
    gen_strong_path,
    inversion_index,
    inversion_index_oracle,
    invert,
    is_acyclic,
    max_inversion_table,
)
from .trees import (
    StarDecomposition,
    Tree,
    decomposition_to_cliques,
    enumerate_trees,
    find_reduction,
    m_star,
    verify_tree_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BooldimError",
    "BudgetExceededError",
    "CapacityError",
    "CliqueFamily",
    "DimensionReport",
    "F2Matrix",
    "FormatError",
    "Graph",
    "IndWitness",
    "InversionCertificate",
    "NotATreeError",
    "StarDecomposition",
    "Tournament",
    "Tree",
    "TrichotomyCase",
    "add_diagonal",
    "apply_inversions",
    "boolean_dim",
    "boolean_dim_oracle",
    "boolean_sum",
    "clique_graph",
    "complete_graph",
    "cycle_graph",
    "decomposition_to_cliques",
    "dimension_report",
    "disagreement_graph",
    "embeds",
    "enumerate_tournaments",
    "enumerate_trees",
    "find_duo",
    "find_reduction",
    "gen_antichain_cn",
    "gen_c3_sum",
    "gen_strong_path",
    "geometric_dim",
    "ind_mod2",
    "inversion_index",
    "inversion_index_oracle",
    "invert",
    "is_acyclic",
    "is_alternating",
    "is_independent_mod2",
    "kernel_backend",
    "m_star",
    "max_inversion_table",
    "ortho_graph",
    "ortho_graph_H",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "rank",
    "realize",
    "symplectic_dim",
    "validate_representation",
    "verify_tree_theorem",
    "write_edge_list",
    "write_graph6",
]
