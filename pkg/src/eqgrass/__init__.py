"""Bredon cohomology of real Grassmannians via bigraded Poincare polynomials."""

from .bipoly import (
    BiPoly,
    K11,
    PointCone,
    PolynomialParseError,
    UniPoly,
    kronholm_poly,
    parse_bipoly,
)
from .modalg import Bidegree, FreeModule, ShiftMove, module_from_poly, render_rank_table
from .schubert import (
    SchubertCell,
    SignWord,
    cell_bidegree,
    e1_page,
    e1_quotient_page,
    enumerate_cells,
    normalize_parameters,
    sign_words,
    total_weight_formula,
    unique_e1_pages,
)
from .search import (
    Budget,
    BudgetExceededError,
    DifferentialPair,
    SolveReport,
    Strategy,
    candidate_outcomes,
    possible_differentials,
    reduce_pages,
    solve,
    subspace_filter,
)
from .oracle import (
    PageDiagnostics,
    fixed_set_poincare,
    gaussian_binomial,
    naive_solve,
    validate_page,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Bidegree",
    "Budget",
    "BudgetExceededError",
    "DifferentialPair",
    "FreeModule",
    "K11",
    "PageDiagnostics",
    "PointCone",
    "PolynomialParseError",
    "SchubertCell",
    "ShiftMove",
    "SignWord",
    "SolveReport",
    "Strategy",
    "UniPoly",
    "candidate_outcomes",
    "cell_bidegree",
    "e1_page",
    "e1_quotient_page",
    "enumerate_cells",
    "fixed_set_poincare",
    "gaussian_binomial",
    "kronholm_poly",
    "module_from_poly",
    "naive_solve",
    "normalize_parameters",
    "parse_bipoly",
    "possible_differentials",
    "reduce_pages",
    "render_rank_table",
    "sign_words",
    "solve",
    "subspace_filter",
    "total_weight_formula",
    "unique_e1_pages",
    "validate_page",
    "__version__",
]
