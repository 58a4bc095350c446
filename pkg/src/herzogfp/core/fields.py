"""Coefficient fields: the rationals and prime fields.

Rational coefficients are :class:`fractions.Fraction` instances, which are
always kept in lowest terms with a positive denominator.  Prime-field
coefficients are plain ``int`` residues in ``[0, p)``; the modulus lives on the
field object, never on the individual coefficient, so two polynomials can only
be combined when their fields compare equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..errors import BadPrime, FieldMismatch


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    for d in range(5, isqrt(n) + 1, 6):
        if n % d == 0 or n % (d + 2) == 0:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes ``p`` with ``lo <= p <= hi``, ascending."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


class RationalField:
    """The field of rational numbers."""

    characteristic = 0
    name = "QQ"

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __reduce__(self):
        return (_rational_field, ())

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def convert(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot convert {value!r} to a rational")

    def reduce(self, value):
        return value

    def inv(self, value: Fraction) -> Fraction:
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(value)

    def to_str(self, value: Fraction) -> str:
        return str(value)


class PrimeField:
    """The prime field with ``p`` elements; residues are ints in ``[0, p)``."""

    name = "GF"

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError(f"modulus {p} exceeds 2^31")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __reduce__(self):
        return (GF, (self.p,))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def convert(self, value) -> int:
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise BadPrime(self.p, f"denominator of {value} is divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot convert {value!r} to GF({self.p})")

    def reduce(self, value: int) -> int:
        return value % self.p

    def inv(self, value: int) -> int:
        if value % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(value, -1, self.p)

    def to_str(self, value: int) -> str:
        return str(value)


QQ = RationalField()


def _rational_field() -> RationalField:
    return QQ


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Return the (cached) prime field of order ``p``; ``p`` is validated once."""
    return PrimeField(p)


def check_same_field(a, b) -> None:
    if a != b:
        raise FieldMismatch(f"cannot combine coefficients over {a!r} and {b!r}")
