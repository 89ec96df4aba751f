"""Units of evidence for likelihood ratios and Bayes factors."""

from ._evunits import (
    CapabilityError,
    DomainError,
    ScaleParseError,
    builtin_scale_names,
    category_boundaries,
    category_label,
    category_of,
    describe,
    eulerian,
    eulerian_row,
    finite_difference_derivative,
    inflection_points,
    interpret,
    logistic,
    logistic_derivative,
    logit,
    lr_from_units,
    posterior,
    required_units,
    royall_urn,
    run_cli,
    unit_base,
    units_from_lr,
    units_table,
    update_matrix,
)

__all__ = [
    "CapabilityError",
    "DomainError",
    "ScaleParseError",
    "builtin_scale_names",
    "category_boundaries",
    "category_label",
    "category_of",
    "describe",
    "eulerian",
    "eulerian_row",
    "finite_difference_derivative",
    "inflection_points",
    "interpret",
    "logistic",
    "logistic_derivative",
    "logit",
    "lr_from_units",
    "posterior",
    "required_units",
    "royall_urn",
    "run_cli",
    "unit_base",
    "units_from_lr",
    "units_table",
    "update_matrix",
]
