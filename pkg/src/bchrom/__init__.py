"""Exact b-chromatic numbers and witness b-colorings for graphs of girth >= 9.

For such graphs (every forest included) the b-chromatic number is m(G) or
m(G) - 1, and the two cases are separated by the existence of a good set:
with one, a b-coloring with m(G) colors is built constructively; without
one, chi_b = m(G) - 1 is exact.  A brute-force oracle provides ground truth
on small instances.
"""

from .coloring import (
    BResult,
    LinkStructure,
    PartialColoring,
    TraceEvent,
    b_coloring_with_good_set,
    classify_links,
    color_links,
    complete_b_vertices,
    derange_assign,
    greedy_extend,
)
from .density import DensityProfile, density_profile
from .errors import InvariantViolation, OracleLimitError, ParseError, PreconditionError
from .goodset import (
    GoodSet,
    GoodSetViolation,
    check_good_set,
    encircles,
    find_encircled_vertex,
    find_good_set,
    has_good_set,
    is_good_set,
)
from .graph import (
    ACYCLIC,
    Graph,
    generate_girth_constrained,
    girth,
    parse_dimacs,
    parse_edge_list,
    restricted_neighbors,
    to_edge_list,
)
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    ValidityReport,
    Violation,
    check_b_coloring,
    exact_b_chromatic,
    find_b_coloring_exact,
)
from .cli import AnalysisRecord, PipelineOutcome, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "ACYCLIC",
    "AnalysisRecord",
    "BResult",
    "DEFAULT_ORACLE_LIMIT",
    "DensityProfile",
    "GoodSet",
    "GoodSetViolation",
    "Graph",
    "InvariantViolation",
    "LinkStructure",
    "OracleLimitError",
    "ParseError",
    "PartialColoring",
    "PipelineOutcome",
    "PreconditionError",
    "TraceEvent",
    "ValidityReport",
    "Violation",
    "b_coloring_with_good_set",
    "check_b_coloring",
    "check_good_set",
    "classify_links",
    "color_links",
    "complete_b_vertices",
    "density_profile",
    "derange_assign",
    "encircles",
    "exact_b_chromatic",
    "find_b_coloring_exact",
    "find_encircled_vertex",
    "find_good_set",
    "generate_girth_constrained",
    "girth",
    "greedy_extend",
    "has_good_set",
    "is_good_set",
    "parse_dimacs",
    "parse_edge_list",
    "restricted_neighbors",
    "run_pipeline",
    "to_edge_list",
]
