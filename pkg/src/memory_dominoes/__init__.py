"""Exact domino-matching counts for the 2 x k game of memory."""
from .algebra import (
    IntPoly,
    MultiSeries,
    SeriesError,
    TruncationError,
    double_factorial,
    series_exp,
    series_inv_sqrt,
    series_reciprocal,
)
from .aggregate import aggregate_oracle, calT, calT_series, rho
from .boards import (
    Board,
    SizeLimitError,
    board_rook_polynomial,
    develop,
    grid_graph,
    matching_polynomial,
    riordan_family,
)
from .counts import (
    DominoTable,
    D_series,
    F_ell,
    count_via_inclusion_exclusion,
    placement_oracle,
    specialize,
)
from .distributions import (
    ExactDist,
    P_polynomial,
    a_coeff,
    bounds_check,
    dist,
    factorial_moment_V,
    mean_P,
    poisson_gap,
)
from .linear import E_horizontal, L_egf, L_oracle, recursion_check

__version__ = "0.1.0"
