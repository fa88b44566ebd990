"""Complex hyperbolic plane geometry: forms, chains, R-circles, limit sets."""

from ._chyp import (
    GeometryError,
    boxtimes,
    builtin_curves,
    cartan_invariant,
    cayley_matrix,
    change_form,
    change_form_matrix,
    classify_curve,
    classify_isometry,
    classify_limit_points,
    herm_inner,
    heis_embed,
    heis_project,
    is_form_unitary,
    normalize_loxodromic,
    run_verify,
    sample_limit_set,
    verify_suites,
)

__all__ = [
    "GeometryError",
    "boxtimes",
    "builtin_curves",
    "cartan_invariant",
    "cayley_matrix",
    "change_form",
    "change_form_matrix",
    "classify_curve",
    "classify_isometry",
    "classify_limit_points",
    "herm_inner",
    "heis_embed",
    "heis_project",
    "is_form_unitary",
    "normalize_loxodromic",
    "run_verify",
    "sample_limit_set",
    "verify_suites",
]
