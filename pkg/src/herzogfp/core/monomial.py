"""Monomials as exponent tuples.

A monomial in ``n`` variables is a tuple of ``n`` non-negative ints.  Plain
tuples are hashable, compare by value and are cheap, so they are used directly
instead of a wrapper class.
"""

from __future__ import annotations

from typing import Tuple

from ..errors import AlgebraError

Monomial = Tuple[int, ...]

# Exponents are kept within machine-width range.
EXPONENT_CAP = 2**31


def check_exponent(e: int) -> int:
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    if e >= EXPONENT_CAP:
        raise AlgebraError(f"exponent {e} overflows the cap 2^31")
    return e


def one(n: int) -> Monomial:
    return (0,) * n


def var(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


def degree(m: Monomial) -> int:
    return sum(m)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def div(b: Monomial, a: Monomial) -> Monomial:
    """The quotient ``b / a``; the caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def power(m: Monomial, k: int) -> Monomial:
    return tuple(check_exponent(e * k) for e in m)


def minimalize(gens) -> list[Monomial]:
    """Reduce a collection of monomials to the antichain of minimal elements."""
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in gens:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


def to_str(m: Monomial, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
