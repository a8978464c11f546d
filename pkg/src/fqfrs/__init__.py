"""Fuzzy quantifier-based fuzzy rough set approximations.

Lower and upper approximations of fuzzy sets under Choquet, Sugeno, OWA,
WOWA and YWI aggregation, together with tools for auditing their granular
representability: granule decomposition, consistency metrics, built-in
counterexamples and a sweep harness over RIM quantifier parameters.
"""

from .approximations import (
    MODEL_KINDS,
    ApproximationModel,
    ApproximationResult,
    GranularityWarning,
    approximate,
    lower_approx,
    lower_classic,
    upper_approx,
    upper_classic,
)
from .connectives import (
    Implicator,
    TNorm,
    check_d_convex,
    lukasiewicz_tnorm,
    minimum_tnorm,
    product_tnorm,
    residual_implicator,
    tnorm_apply,
    tnorm_by_name,
)
from .counterexamples import COUNTEREXAMPLES, reproduce
from .fuzzy_sets import (
    FuzzyRelation,
    FuzzySet,
    Universe,
    build_relation,
    foreset,
    fuzzy_cardinality,
    min_transitive_closure,
    validate_t_equivalence,
)
from .granularity import (
    ConsistencyReport,
    Granule,
    consistency_report,
    granular_decomposition,
    granule,
    is_granularly_representable,
    max_granule_level,
)
from .integrals import SortedEvaluation, choquet, owa, sorted_evaluation, sugeno
from .measures import (
    MonotoneMeasure,
    RIMQuantifier,
    WeightVector,
    check_monotone,
    identity_quantifier,
    owa_weights_to_measure,
    random_measure,
    symmetric_measure,
    table_measure,
    universal_quantifier,
    wowa_measure,
    ywi_measure,
    zadeh_s,
)

__version__ = "0.1.0"

__all__ = [
    "MODEL_KINDS",
    "ApproximationModel",
    "ApproximationResult",
    "GranularityWarning",
    "approximate",
    "lower_approx",
    "lower_classic",
    "upper_approx",
    "upper_classic",
    "Implicator",
    "TNorm",
    "check_d_convex",
    "lukasiewicz_tnorm",
    "minimum_tnorm",
    "product_tnorm",
    "residual_implicator",
    "tnorm_apply",
    "tnorm_by_name",
    "COUNTEREXAMPLES",
    "reproduce",
    "FuzzyRelation",
    "FuzzySet",
    "Universe",
    "build_relation",
    "foreset",
    "fuzzy_cardinality",
    "min_transitive_closure",
    "validate_t_equivalence",
    "ConsistencyReport",
    "Granule",
    "consistency_report",
    "granular_decomposition",
    "granule",
    "is_granularly_representable",
    "max_granule_level",
    "SortedEvaluation",
    "choquet",
    "owa",
    "sorted_evaluation",
    "sugeno",
    "MonotoneMeasure",
    "RIMQuantifier",
    "WeightVector",
    "check_monotone",
    "identity_quantifier",
    "owa_weights_to_measure",
    "random_measure",
    "symmetric_measure",
    "table_measure",
    "universal_quantifier",
    "wowa_measure",
    "ywi_measure",
    "zadeh_s",
    "__version__",
]
