"""Square quiver algebras on the torus."""

from ._core import (
    SqaError,
    TorusQuiver,
    center_generators,
    center_matches_formula,
    bd_exact,
    fixture,
    fixture_names,
    generate_ypq,
    is_irreducible,
    mutate,
    q_of,
    rcharges,
    ypq_center_formula,
)

__all__ = [
    "SqaError",
    "TorusQuiver",
    "bd_exact",
    "center_generators",
    "center_matches_formula",
    "fixture",
    "fixture_names",
    "generate_ypq",
    "is_irreducible",
    "mutate",
    "q_of",
    "rcharges",
    "ypq_center_formula",
]
