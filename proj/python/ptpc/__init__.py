"""Minimum-weight codeword counts of pre-transformed polar codes."""

from ._core import (
    CodeSpec,
    PacPolynomial,
    PreTransform,
    __version__,
    count_min_weight,
    lb_non_pretransformable,
    lb_rm_closed_form,
    pac_transform,
    random_transform,
    rm_profile,
    run_cli,
    search_optimal_polynomial,
    union_bound_fer,
    weight_spectrum,
)

__all__ = [
    "CodeSpec",
    "PacPolynomial",
    "PreTransform",
    "__version__",
    "count_min_weight",
    "lb_non_pretransformable",
    "lb_rm_closed_form",
    "pac_transform",
    "random_transform",
    "rm_profile",
    "run_cli",
    "search_optimal_polynomial",
    "union_bound_fer",
    "weight_spectrum",
]
