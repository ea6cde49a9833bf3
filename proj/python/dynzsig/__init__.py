"""Primitive divisors in orbits of polynomial maps over Q."""

from ._core import (
    HypothesisViolated,
    ParseError,
    bound_M,
    canonical_height,
    conjugate,
    factor,
    family_check,
    is_powerful,
    is_probable_prime,
    map_height,
    normalize_poly,
    orbit,
    rigid_check,
    run,
    weil_height,
)

__all__ = [
    "HypothesisViolated",
    "ParseError",
    "bound_M",
    "canonical_height",
    "conjugate",
    "factor",
    "family_check",
    "is_powerful",
    "is_probable_prime",
    "map_height",
    "normalize_poly",
    "orbit",
    "rigid_check",
    "run",
    "weil_height",
]
