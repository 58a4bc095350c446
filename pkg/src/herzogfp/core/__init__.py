"""Exact coefficient arithmetic, monomial orders and sparse polynomials."""

from .fields import GF, QQ, PrimeField, RationalField, is_prime, primes_between
from .order import MonomialOrder, block, degrevlex, elimination, lex, matrix, weighted
from .polynomial import (
    Polynomial,
    leading_term,
    partial_derivative,
    reduce_coefficients_mod_p,
    variables,
)
from .substitution import LinearSubstitution, apply_substitution


def compare(order: MonomialOrder, a, b) -> int:
    """Compare two monomials under ``order``: -1, 0 or 1."""
    return order.compare(tuple(a), tuple(b))


__all__ = [
    "GF",
    "QQ",
    "PrimeField",
    "RationalField",
    "is_prime",
    "primes_between",
    "MonomialOrder",
    "block",
    "degrevlex",
    "elimination",
    "lex",
    "matrix",
    "weighted",
    "Polynomial",
    "leading_term",
    "partial_derivative",
    "reduce_coefficients_mod_p",
    "variables",
    "LinearSubstitution",
    "apply_substitution",
    "compare",
]
