"""Consistency checking and natural extension of choice assessments."""

from ._choix import (
    Assessment,
    InvalidInput,
    Method,
    ModelKind,
    SolverError,
    Timeout,
    ToleranceConfig,
    assessment_to_conjunctive,
    assessment_to_conjunctive_naive,
    check_consistency,
    conjunctive_to_disjunctive_simplified,
    disjunctive_sets,
    disjunctive_size,
    g_ord,
    in_natural_extension,
    is_feasible,
    leq,
    lower_expectation,
    min_cone_subset,
    natural_extension,
    option_ord,
    random_model_assessment,
    rescale_assessment,
    strictly_less,
    translate_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
