"""Separating-domination codes: exact solvers, verifiers, and generators."""

from .codes import (
    CodeKind,
    KIND_INEQUALITIES,
    NotAdmissibleError,
    SeparationFamilies,
    build_hypergraph,
    forced_vertices,
    is_admissible,
    is_full_separating,
    verify_code,
    verify_code_fast,
    verify_full_separating,
    x_number,
)
from .families import (
    Family,
    FamilySpec,
    disjoint_union,
    formula_x_number,
    ftd_code_path_cycle,
    generate,
    random_gnp,
)
from .graphs import (
    Graph,
    GraphFormatError,
    UniverseMismatchError,
    VertexSet,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
    sym_diff,
)
from .hypergraphs import (
    CoverResult,
    DEFAULT_NODE_BUDGET,
    EmptyHyperedgeError,
    Hypergraph,
    greedy_cover,
    is_cover,
    min_cover,
    precedes,
    remove_redundant,
)
from .sat_reduction import (
    CnfFormula,
    DimacsError,
    GadgetGraph,
    assignment_from_code,
    brute_force_sat,
    build_gadget,
    code_from_assignment,
    parse_dimacs,
)

__version__ = "0.1.0"

__all__ = [
    "CodeKind",
    "CnfFormula",
    "CoverResult",
    "DEFAULT_NODE_BUDGET",
    "DimacsError",
    "EmptyHyperedgeError",
    "Family",
    "FamilySpec",
    "GadgetGraph",
    "Graph",
    "GraphFormatError",
    "Hypergraph",
    "KIND_INEQUALITIES",
    "NotAdmissibleError",
    "SeparationFamilies",
    "UniverseMismatchError",
    "VertexSet",
    "assignment_from_code",
    "brute_force_sat",
    "build_gadget",
    "build_hypergraph",
    "code_from_assignment",
    "disjoint_union",
    "forced_vertices",
    "format_edge_list",
    "formula_x_number",
    "ftd_code_path_cycle",
    "generate",
    "greedy_cover",
    "induced_subgraph",
    "is_admissible",
    "is_cover",
    "is_full_separating",
    "min_cover",
    "parse_dimacs",
    "parse_edge_list",
    "precedes",
    "random_gnp",
    "remove_redundant",
    "sym_diff",
    "verify_code",
    "verify_code_fast",
    "verify_full_separating",
    "x_number",
]
