"""Cubic Hamiltonian bipartite graphs in D3 chord index notation: construction,
girth analysis, exhaustive search by symmetry factor, and a persistent catalog."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CatalogError,
    ConflictError,
    HbgError,
    IncompleteData,
    InvalidChordSet,
    InvalidLcf,
    InvalidProblem,
    InvalidSpec,
    NotCanonicalHBG,
    OrderMismatch,
    ParseError,
)
from .d3core import (  # noqa: E402
    ChordExpansion,
    D3Spec,
    LabeledCubicGraph,
    build_graph,
    expand_chords,
    extract_d3,
    minimal_symmetry_factor,
)
from .analysis import (  # noqa: E402
    GirthReport,
    are_isomorphic_small,
    check_symmetry_girth_bound,
    find_isomorphism,
    girth,
    girth_at_least,
    verify_hamiltonian_bipartite,
)
from .notation import LcfSpec, emit_graph, from_lcf, parse_d3, parse_lcf, to_lcf  # noqa: E402
from .search import (  # noqa: E402
    Mode,
    SearchOutcome,
    SearchProblem,
    Verdict,
    enumerate_candidates,
    lb_for_subproblem,
    min_order_for,
    search,
)
from .catalog import (  # noqa: E402
    Catalog,
    CatalogEntry,
    FamilyProbe,
    Monotonicity,
    Status,
    classify_monotonic,
    fill_min_order,
    fill_orders,
    probe_family,
    render_table,
    summary_table,
)

__all__ = [
    "# noqa: E402",
    "# noqa: E402",
    "# noqa: E402",
    "# noqa: E402",
    "# noqa: E402",
    "are_isomorphic_small",
    "build_graph",
    "Catalog",
    "CatalogEntry",
    "CatalogError",
    "check_symmetry_girth_bound",
    "ChordExpansion",
    "classify_monotonic",
    "ConflictError",
    "D3Spec",
    "emit_graph",
    "enumerate_candidates",
    "expand_chords",
    "extract_d3",
    "FamilyProbe",
    "fill_min_order",
    "fill_orders",
    "find_isomorphism",
    "from_lcf",
    "girth",
    "girth_at_least",
    "GirthReport",
    "HbgError",
    "IncompleteData",
    "InvalidChordSet",
    "InvalidLcf",
    "InvalidProblem",
    "InvalidSpec",
    "LabeledCubicGraph",
    "lb_for_subproblem",
    "LcfSpec",
    "min_order_for",
    "minimal_symmetry_factor",
    "Mode",
    "Monotonicity",
    "NotCanonicalHBG",
    "OrderMismatch",
    "parse_d3",
    "parse_lcf",
    "ParseError",
    "probe_family",
    "render_table",
    "search",
    "SearchOutcome",
    "SearchProblem",
    "Status",
    "summary_table",
    "to_lcf",
    "Verdict",
    "verify_hamiltonian_bipartite",
]
