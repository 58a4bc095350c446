"""Buchberger engine and ideal operations."""

from .engine import DEFAULT_BUDGET
from .ideal import (
    GroebnerBasis,
    Ideal,
    MonomialIdeal,
    buchberger,
    colon,
    contains,
    divide_exact,
    initial_ideal,
    intersect,
    is_groebner,
    normal_form,
    projective_empty,
    quotient_by_element,
)

__all__ = [
    "DEFAULT_BUDGET",
    "GroebnerBasis",
    "Ideal",
    "MonomialIdeal",
    "buchberger",
    "colon",
    "contains",
    "divide_exact",
    "initial_ideal",
    "intersect",
    "is_groebner",
    "normal_form",
    "projective_empty",
    "quotient_by_element",
]
