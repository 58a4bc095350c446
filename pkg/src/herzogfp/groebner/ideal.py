"""Ideals, Groebner bases and the operations built on them."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core import monomial as mono
from ..core.fields import PrimeField, QQ
from ..core.order import MonomialOrder, degrevlex, elimination, matrix
from ..core.polynomial import Polynomial
from ..errors import AlgebraError, DimensionMismatch, FieldMismatch
from . import engine
from .engine import DEFAULT_BUDGET


def _char(field) -> int | None:
    return field.p if isinstance(field, PrimeField) else None


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by decreasing leading monomial."""

    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def satisfies_buchberger_criterion(self) -> bool:
        return is_groebner(self.elements, self.order)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators (an antichain under divisibility)."""

    nvars: int
    minimal_generators: tuple[tuple[int, ...], ...]

    @classmethod
    def from_monomials(cls, nvars: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(nvars, tuple(mono.minimalize(tuple(g) for g in gens)))

    @property
    def squarefree(self) -> bool:
        return all(mono.is_squarefree(m) for m in self.minimal_generators)

    def contains(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        return any(mono.divides(g, m) for g in self.minimal_generators)

    def non_squarefree_generators(self) -> list[tuple[int, ...]]:
        return [m for m in self.minimal_generators if not mono.is_squarefree(m)]

    def generator_set(self) -> frozenset:
        return frozenset(self.minimal_generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.generator_set() == other.generator_set()

    def __hash__(self) -> int:
        return hash((self.nvars, self.generator_set()))

    def to_strs(self, names: Sequence[str] | None = None) -> list[str]:
        names = list(names) if names is not None else [f"x{i}" for i in range(self.nvars)]
        return [mono.to_str(m, names) for m in self.minimal_generators]


class Ideal:
    """An ideal of a polynomial ring, given by generators, with cached Groebner bases.

    The generator list is fixed at construction.  Reduced bases are cached per
    monomial order; the cache is write-once per key, so concurrent readers only
    ever observe a missing entry or the final basis.
    """

    def __init__(self, generators: Iterable[Polynomial], nvars: int | None = None, field=None):
        gens = [g for g in generators]
        if not gens and nvars is None:
            raise ValueError("an empty generator list needs nvars")
        self.nvars = nvars if nvars is not None else gens[0].nvars
        self.field = field if field is not None else (gens[0].field if gens else QQ)
        for g in gens:
            if g.nvars != self.nvars:
                raise DimensionMismatch(f"generator {g} has {g.nvars} variables, expected {self.nvars}")
            if g.field != self.field:
                raise FieldMismatch(f"generator over {g.field!r} in an ideal over {self.field!r}")
        self.generators = tuple(g for g in gens if g)
        self._gb_cache: dict = {}
        self._lock = threading.Lock()

    def __getstate__(self):
        # the basis cache and its lock stay in this process
        return {"nvars": self.nvars, "field": self.field, "generators": self.generators}

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._gb_cache = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"Ideal([{', '.join(str(g) for g in self.generators)}], field={self.field!r})"

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def is_zero(self) -> bool:
        return not self.generators

    def is_principal_given(self) -> bool:
        return len(self.generators) == 1

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def default_order(self) -> MonomialOrder:
        return degrevlex(self.nvars)

    def groebner(self, order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
        return buchberger(self, order or self.default_order(), budget)

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_compatible(self, other)
        return Ideal(self.generators + other.generators, self.nvars, self.field)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check_compatible(self, other)
        return Ideal([f * g for f in self.generators for g in other.generators], self.nvars, self.field)

    def same_ideal(self, other: "Ideal", order: MonomialOrder | None = None) -> bool:
        order = order or self.default_order()
        return set(self.groebner(order).elements) == set(other.groebner(order).elements)

    def contains(self, f: Polynomial, order: MonomialOrder | None = None) -> bool:
        return contains(self, f, order)

    def map(self, fn) -> "Ideal":
        return Ideal([fn(g) for g in self.generators], self.nvars, self.field)


def _check_compatible(a: Ideal, b: Ideal) -> None:
    if a.nvars != b.nvars:
        raise DimensionMismatch(f"ideals in {a.nvars} and {b.nvars} variables")
    if a.field != b.field:
        raise FieldMismatch(f"ideals over {a.field!r} and {b.field!r}")


def _raw(f: Polynomial, p):
    if p is not None:
        return dict(f.terms)
    return {m: int(c) for m, c in f.integer_primitive().terms.items()}


def buchberger(I: Ideal, order: MonomialOrder, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` under ``order``, cached on the ideal."""
    if order.nvars != I.nvars:
        raise DimensionMismatch(f"order on {order.nvars} variables for an ideal on {I.nvars}")
    cached = I._gb_cache.get(order)
    if cached is not None:
        return cached
    p = _char(I.field)
    graded = all(w > 0 for w in order.rows[0])
    if graded or I.is_homogeneous():
        raw = engine.groebner([_raw(g, p) for g in I.generators], order.key, p, budget)
    else:
        raw = _via_homogenization(I, order, budget)
    gb = GroebnerBasis(order, tuple(Polynomial._raw(I.nvars, t, I.field) for t in raw))
    with I._lock:
        return I._gb_cache.setdefault(order, gb)


def _via_homogenization(I: Ideal, order: MonomialOrder, budget: int) -> list[dict]:
    """Basis for a non-graded order on inhomogeneous input, through the homogenized ideal.

    Direct runs (lex especially) can climb to remainders of degree in the
    thousands before settling.  Instead: homogenize with a new last variable
    ``h``, saturate by ``h`` (a degrevlex basis with ``h`` smallest, divided by
    the largest power of ``h`` in each element), take the basis of the
    saturation for "total degree, then ``order`` on the old variables", and set
    ``h = 1``.  The homogeneous run proceeds degree by degree, and the
    dehomogenized elements form a Groebner basis for ``order``.
    """
    n, p = I.nvars, _char(I.field)
    homog = []
    for g in I.generators:
        d = g.total_degree()
        homog.append(Polynomial._raw(n + 1, {m + (d - sum(m),): c for m, c in g.terms.items()}, I.field))
    H = Ideal(homog, n + 1, I.field)
    saturated = []
    for g in buchberger(H, degrevlex(n + 1), budget).elements:
        k = min(m[n] for m in g.terms)
        saturated.append(Polynomial._raw(n + 1, {m[:n] + (m[n] - k,): c for m, c in g.terms.items()}, I.field))
    lifted = matrix([[1] * (n + 1)] + [list(r) + [0] for r in order.rows])
    G = buchberger(Ideal(saturated, n + 1, I.field), lifted, budget)
    r = engine.Reducer(order.key, p)
    dehomogenized = []
    for g in G.elements:
        terms: dict = {}
        for m, c in g.terms.items():
            terms[m[:n]] = terms.get(m[:n], 0) + c
        dehomogenized.append(_raw(Polynomial(n, terms, I.field), p))
    return engine.interreduce(dehomogenized, r)


def normal_form(f: Polynomial, basis: GroebnerBasis | Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by the basis elements."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        elements = basis.elements
    else:
        elements = tuple(basis)
        order = order or degrevlex(f.nvars)
    for g in elements:
        if g.nvars != f.nvars:
            raise DimensionMismatch("basis and polynomial in different rings")
        if g.field != f.field:
            raise FieldMismatch("basis and polynomial over different fields")
    p = _char(f.field)
    rem = engine.normal_form(dict(f.terms), [dict(g.terms) for g in elements], order.key, p)
    return Polynomial._raw(f.nvars, rem, f.field)


def is_groebner(elements: Sequence[Polynomial], order: MonomialOrder) -> bool:
    if not elements:
        return True
    p = _char(elements[0].field)
    return engine.is_groebner([dict(g.terms) for g in elements], order.key, p)


def initial_ideal(I: Ideal, order: MonomialOrder, budget: int = DEFAULT_BUDGET) -> MonomialIdeal:
    gb = buchberger(I, order, budget)
    return MonomialIdeal.from_monomials(I.nvars, gb.leading_monomials())


def contains(I: Ideal, f: Polynomial, order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    if f.nvars != I.nvars:
        raise DimensionMismatch("polynomial and ideal in different rings")
    if f.field != I.field:
        raise FieldMismatch("polynomial and ideal over different fields")
    if not f:
        return True
    if I.is_zero():
        return False
    gb = buchberger(I, order or I.default_order(), budget)
    return normal_form(f, gb).is_zero()


def intersect(I: Ideal, J: Ideal, order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET) -> Ideal:
    """``I`` meet ``J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    _check_compatible(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal([], I.nvars, I.field)
    order = order or I.default_order()
    n = I.nvars
    t = Polynomial.variable(n + 1, 0, I.field)
    one_minus_t = Polynomial.constant(n + 1, 1, I.field) - t
    gens = [t * f.extend(1) for f in I.generators] + [one_minus_t * g.extend(1) for g in J.generators]
    big = Ideal(gens, n + 1, I.field)
    gb = buchberger(big, elimination(1, order), budget)
    kept = [g.drop_leading(1) for g in gb.elements if not any(m[0] for m in g.terms)]
    return Ideal(kept, n, I.field)


def divide_exact(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """The quotient ``f / g``; raises if ``g`` does not divide ``f``."""
    order = order or degrevlex(f.nvars)
    field = f.field
    lm_g, lc_g = g.leading_term(order)
    inv = field.inv(lc_g)
    rest = f
    quotient = Polynomial.zero(f.nvars, field)
    while rest:
        lm, lc = rest.leading_term(order)
        if not mono.divides(lm_g, lm):
            raise AlgebraError(f"{g} does not divide {f}")
        q = mono.div(lm, lm_g)
        c = field.reduce(lc * inv)
        quotient = quotient + Polynomial._raw(f.nvars, {q: c}, field)
        rest = rest - g.mul_term(q, c)
    return quotient


def quotient_by_element(J: Ideal, f: Polynomial, order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET) -> Ideal:
    """``(J : f)`` computed as ``(J meet (f)) / f``."""
    meet = intersect(J, Ideal([f], J.nvars, J.field), order, budget)
    return Ideal([divide_exact(h, f) for h in meet.generators], J.nvars, J.field)


def colon(J: Ideal, I: Ideal, order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET) -> Ideal:
    """The ideal quotient ``(J : I) = {s : s*I in J}``."""
    _check_compatible(J, I)
    if I.is_zero():
        raise ValueError("colon by the zero ideal")
    order = order or J.default_order()
    result: Ideal | None = None
    for f in I.generators:
        part = quotient_by_element(J, f, order, budget)
        result = part if result is None else intersect(result, part, order, budget)
    # canonical generators: the reduced basis
    gb = buchberger(result, order, budget)
    out = Ideal(gb.elements, J.nvars, J.field)
    out._gb_cache[order] = gb
    return out


def projective_empty(I: Ideal, budget: int = DEFAULT_BUDGET) -> bool:
    """True when the homogeneous ideal ``I`` has no projective zero.

    Equivalent to: for each variable some pure power of it is a leading
    monomial of the reduced basis (degrevlex is used).
    """
    if not I.is_homogeneous():
        raise ValueError("projective_empty needs a homogeneous ideal")
    if I.is_zero():
        return False
    lms = buchberger(I, I.default_order(), budget).leading_monomials()
    for i in range(I.nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return False
    return True
