"""Exact constrained quantization of the Cantor distribution.

Builds the optimal n-point codebooks on the family of line constraints
S_j = {(x, x + 1/j) : -1/j <= x <= 1}, evaluates every error quantity in
exact rational arithmetic, and verifies the closed forms with independent
search oracles (Lloyd iteration and an exact dynamic program).
"""

from .asymptotics import (
    AsymptoticSample,
    coefficient_sequence,
    dimension_sequence,
    sample_at,
    v_infinity,
)
from .closedform import (
    DistortionReport,
    V_INFINITY,
    a_term,
    a_term_closed,
    admissible_split_sets,
    build_alpha,
    canonical_split_set,
    count_optimal_sets,
    distortion_closed_form,
    level_of,
    power_of_two_error,
    quantization_error,
    unconstrained_baseline,
    unconstrained_error,
)
from .constraint import (
    ConstraintPoint,
    PointSet,
    bisector_foot,
    feasible_window,
    rho,
    u_forward,
    u_inverse,
)
from .measure import (
    MEAN,
    VARIANCE,
    BasicInterval,
    Word,
    apply_map,
    basic_interval,
    centroid,
    centroid_numerators,
    moment_sum,
    self_similar_distortion,
    words,
)
from .oracle import (
    EmptyCellError,
    OracleError,
    Partition,
    RefinementDepthError,
    cell_measures,
    dp_optimal,
    exact_distortion,
    interval_measures,
    lloyd_step,
)

__version__ = "0.1.0"
