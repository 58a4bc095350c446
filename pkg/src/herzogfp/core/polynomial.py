"""Sparse multivariate polynomials over QQ or GF(p)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from ..errors import BadPrime, DimensionMismatch, FieldMismatch
from . import monomial as mono
from .fields import QQ, GF, PrimeField, RationalField
from .monomial import Monomial
from .order import MonomialOrder, degrevlex


def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(n)]


class Polynomial:
    """An immutable sparse polynomial: a map from exponent tuples to nonzero coefficients.

    Arithmetic between polynomials requires the same variable count and the
    same coefficient field; anything else raises rather than coercing.
    """

    __slots__ = ("nvars", "field", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None, field=QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise DimensionMismatch(f"monomial {m} in a ring with {nvars} variables")
                for e in m:
                    mono.check_exponent(e)
                c = field.convert(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict, field) -> "Polynomial":
        # Trusted constructor: terms already normalized with no zeros.
        self = cls.__new__(cls)
        self.nvars = nvars
        self.field = field
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def constant(cls, nvars: int, c, field=QQ) -> "Polynomial":
        return cls(nvars, {mono.one(nvars): c}, field)

    @classmethod
    def variable(cls, nvars: int, i: int, field=QQ) -> "Polynomial":
        return cls._raw(nvars, {mono.var(nvars, i): field.one}, field)

    @classmethod
    def monomial(cls, m: Sequence[int], c=1, field=QQ) -> "Polynomial":
        return cls(len(m), {tuple(m): c}, field)

    @classmethod
    def zero(cls, nvars: int, field=QQ) -> "Polynomial":
        return cls._raw(nvars, {}, field)

    # ---- basic queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> list[Monomial]:
        return list(self.terms)

    def coefficient(self, m: Sequence[int]):
        return self.terms.get(tuple(m), self.field.zero)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def leading_term(self, order: MonomialOrder):
        """The largest support monomial under ``order`` and its coefficient."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if order.nvars != self.nvars:
            raise DimensionMismatch(f"order on {order.nvars} variables, polynomial on {self.nvars}")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Monomial, object]]:
        order = order or degrevlex(self.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order or degrevlex(self.nvars))
        return self.scale(self.field.inv(lc))

    # ---- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine polynomials over {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.field.reduce
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = red(terms.get(m, 0) + c)
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.nvars, terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return Polynomial._raw(self.nvars, {m: red(-c) for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = self.field.convert(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        red = self.field.reduce
        return Polynomial._raw(self.nvars, {m: red(v * c) for m, v in self.terms.items()}, self.field)

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term ``c * x^m``."""
        c = self.field.convert(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        red = self.field.reduce
        return Polynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(k, m)): red(v * c) for k, v in self.terms.items()},
            self.field,
        )

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.field.reduce
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        out = {}
        for m, c in terms.items():
            c = red(c)
            if c:
                for e in m:
                    mono.check_exponent(e)
                out[m] = c
        return Polynomial._raw(self.nvars, out, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial.constant(self.nvars, 1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other, self.field)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self.terms.items())))
        return self._hash

    # ---- calculus and coefficient maps ----------------------------------

    def partial_derivative(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        red = self.field.reduce
        terms = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                v = red(c * e)
                if v:
                    dm = m[:i] + (e - 1,) + m[i + 1:]
                    terms[dm] = v
        return Polynomial._raw(self.nvars, terms, self.field)

    def evaluate(self, point: Sequence):
        red = self.field.reduce
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total += v
        return red(total) if isinstance(self.field, PrimeField) else total

    def extend(self, k: int, front: bool = True) -> "Polynomial":
        """Embed into a ring with ``k`` extra variables (prepended by default)."""
        pad = (0,) * k
        if front:
            terms = {pad + m: c for m, c in self.terms.items()}
        else:
            terms = {m + pad: c for m, c in self.terms.items()}
        return Polynomial._raw(self.nvars + k, terms, self.field)

    def drop_leading(self, k: int) -> "Polynomial":
        """Inverse of :meth:`extend` for polynomials free of the first ``k`` variables."""
        terms = {}
        for m, c in self.terms.items():
            if any(m[:k]):
                raise ValueError("polynomial involves an eliminated variable")
            terms[m[k:]] = c
        return Polynomial._raw(self.nvars - k, terms, self.field)

    def integer_primitive(self) -> "Polynomial":
        """Scale a rational polynomial to a primitive integer polynomial.

        Denominators are cleared and the integer content divided out; the sign
        is left as the resulting coefficients dictate.
        """
        if not isinstance(self.field, RationalField):
            raise FieldMismatch("integer_primitive needs rational coefficients")
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {m: int(c * den) for m, c in self.terms.items()}
        content = 0
        for v in ints.values():
            content = gcd(content, v)
        return Polynomial._raw(self.nvars, {m: Fraction(v // content) for m, v in ints.items()}, QQ)

    def reduce_mod(self, p: int) -> "Polynomial":
        """Reduce rational coefficients into GF(p); raises :class:`BadPrime`.

        ``p`` may not divide any denominator of the polynomial as given.  The
        result is the primitive integer form of ``self`` read modulo ``p``.
        """
        if not isinstance(self.field, RationalField):
            raise FieldMismatch("reduce_mod needs rational coefficients")
        F = GF(p)
        for c in self.terms.values():
            if c.denominator % p == 0:
                raise BadPrime(p, f"coefficient {c} has a denominator divisible by {p}")
        prim = self.integer_primitive()
        terms = {}
        for m, c in prim.terms.items():
            v = int(c) % p
            if v:
                terms[m] = v
        if self.terms and not terms:
            raise BadPrime(p, "polynomial vanishes modulo p")
        return Polynomial._raw(self.nvars, terms, F)

    def lift(self) -> "Polynomial":
        """View a GF(p) polynomial as a rational one with residues in [0, p)."""
        return Polynomial._raw(self.nvars, {m: Fraction(c) for m, c in self.terms.items()}, QQ)

    def change_field(self, field) -> "Polynomial":
        return Polynomial(self.nvars, dict(self.terms), field)

    # ---- printing --------------------------------------------------------

    def to_str(self, names: Sequence[str] | None = None, order: MonomialOrder | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            neg = isinstance(c, Fraction) and c < 0
            a = -c if neg else c
            ms = mono.to_str(m, names)
            if ms == "1":
                body = str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{a}*{ms}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, field={self.field!r})"


def variables(n: int, field=QQ) -> list[Polynomial]:
    """The variables of an ``n``-variable polynomial ring, for building test data."""
    return [Polynomial.variable(n, i, field) for i in range(n)]


def reduce_coefficients_mod_p(f: Polynomial, p: int) -> Polynomial:
    return f.reduce_mod(p)


def leading_term(f: Polynomial, order: MonomialOrder):
    return f.leading_term(order)


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    return f.partial_derivative(i)


def from_terms(items: Iterable[tuple[Sequence[int], object]], nvars: int, field=QQ) -> Polynomial:
    terms: dict = {}
    for m, c in items:
        terms[tuple(m)] = terms.get(tuple(m), 0) + c
    return Polynomial(nvars, terms, field)
