"""Equitable colorings of vertex-weighted graphs with exact arithmetic.

A coloring is alpha-EQ1 when, for every ordered pair of classes, removing a
single vertex from the first class brings its weight to at most alpha times
the second class's weight.  This package constructs such colorings (exact,
2-approximate, and (1+eps)-approximate), verifies them exactly, and ships
desk-scale exhaustive oracles plus a CLI.
"""

from .core import (
    Coloring,
    PartialColoring,
    Rational,
    VertexPartition,
    WeightedGraph,
    degree_profile,
    format_rational,
    parse_rational,
)
from .errors import (
    AttemptsExhausted,
    BudgetExceeded,
    EquicolorError,
    FormatError,
    MatchingInfeasible,
    NoAugmentingPath,
    PreconditionViolated,
)
from .extend import extend_one_per_class, fill_up
from .fileio import (
    format_coloring,
    format_instance,
    format_partition,
    parse_coloring,
    parse_instance,
    parse_partition,
)
from .instances import (
    QuadSurd,
    SQRT2,
    gen_eqx_counterexample,
    gen_lower_bound_instance,
    gen_random_bounded_degree,
    instance_digest,
    oracle_chromatic_number,
    oracle_max_weight_independent_set,
    oracle_min_alpha_eq1,
)
from .lowmax import (
    chromatic_initial_coloring,
    greedy_coloring,
    low_max_wt_eq1,
    split_classes,
)
from .partitioneq import equitable_for_multiples, partition_equitable_coloring
from .randomized import (
    DependencyInstance,
    class_probability_closed_form,
    concentration_bound,
    estimate_class_probability,
    monte_carlo_tail,
    random_partial_coloring,
    randomized_eps_eq1,
)
from .swap2eq1 import (
    find_envied_independent_set,
    minimize_envied_set,
    two_eq1_coloring,
)
from .verify import (
    Eq1Report,
    check_partition_equitable,
    compute_eta,
    eq1_factor,
    eqx_factor,
    is_proper,
    violating_edge,
)
from .weightedeq1 import (
    BucketPlan,
    bucket_index_of,
    build_bucket_plan,
    eps_eq1_coloring,
    eq1_coloring_distinct_weights,
    eq1_coloring_sqrt,
)

__version__ = "0.1.0"

__all__ = [
    "AttemptsExhausted",
    "BucketPlan",
    "BudgetExceeded",
    "Coloring",
    "DependencyInstance",
    "Eq1Report",
    "EquicolorError",
    "FormatError",
    "MatchingInfeasible",
    "NoAugmentingPath",
    "PartialColoring",
    "PreconditionViolated",
    "QuadSurd",
    "Rational",
    "SQRT2",
    "VertexPartition",
    "WeightedGraph",
    "bucket_index_of",
    "build_bucket_plan",
    "check_partition_equitable",
    "chromatic_initial_coloring",
    "class_probability_closed_form",
    "compute_eta",
    "concentration_bound",
    "degree_profile",
    "eps_eq1_coloring",
    "eq1_coloring_distinct_weights",
    "eq1_coloring_sqrt",
    "eq1_factor",
    "eqx_factor",
    "equitable_for_multiples",
    "estimate_class_probability",
    "extend_one_per_class",
    "fill_up",
    "find_envied_independent_set",
    "format_coloring",
    "format_instance",
    "format_partition",
    "format_rational",
    "gen_eqx_counterexample",
    "gen_lower_bound_instance",
    "gen_random_bounded_degree",
    "greedy_coloring",
    "instance_digest",
    "is_proper",
    "low_max_wt_eq1",
    "minimize_envied_set",
    "monte_carlo_tail",
    "oracle_chromatic_number",
    "oracle_max_weight_independent_set",
    "oracle_min_alpha_eq1",
    "parse_coloring",
    "parse_instance",
    "parse_partition",
    "parse_rational",
    "partition_equitable_coloring",
    "random_partial_coloring",
    "randomized_eps_eq1",
    "split_classes",
    "two_eq1_coloring",
    "violating_edge",
]
