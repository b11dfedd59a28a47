"""Tournament quadrangularity toolkit.

Constructs tournaments, decides quadrangularity with witness reporting,
computes domination quantities, verifies the characterization theorems
against brute-force oracles, and searches rotational symbols.
"""

from .core import (
    Neighborhoods,
    SpecialVertices,
    StrongDecomposition,
    Tournament,
    dual,
    induced,
    is_isomorphic,
    neighborhoods,
    special_vertices,
    strong_decomposition,
    validate,
)
from .domination import (
    DominationInfo,
    SimpleGraph,
    competition_graph,
    dominant_pairs,
    dominates,
    domination_graph,
    domination_number,
    gamma_exceeds,
)
from .generators import (
    Symbol,
    all_tournaments,
    augment,
    make_symbol,
    quadratic_residue,
    random_tournament,
    regular_tournaments,
    rotational,
    u_n,
)
from .orthogonality import (
    BinaryPattern,
    NnzReport,
    QuadReport,
    adjacency_pattern,
    closed_union_in_quad,
    comb_orthogonal,
    comb_row_orthogonal,
    is_in_quadrangular,
    is_out_quadrangular,
    is_quadrangular,
    nnz_report,
    pattern_of,
    quadrangularity,
)
from .symbols import (
    SearchResult,
    enumerate_symbols,
    family_symbol,
    search,
    symbol_criterion,
)
from .theorems import ClassificationTrace, classify

__version__ = "0.1.0"
