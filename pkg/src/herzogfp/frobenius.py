"""Frobenius powers, Fedder's F-purity criterion, the trace map and compatibility checks.

Everything here works over a prime field GF(p).  Two facts are used
throughout: Frobenius is additive in characteristic ``p`` and fixes GF(p), so
``f**q`` is obtained by raising each monomial to the ``q``-th power; and
membership in the Frobenius power of the maximal ideal, ``(x_0^p, ..., x_n^p)``,
is decided term by term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from operator import add
from typing import Optional

from .core import monomial as mono
from .core.fields import PrimeField
from .core.order import MonomialOrder, degrevlex
from .core.polynomial import Polynomial
from .errors import AlgebraError, CapExceeded, FieldMismatch
from .groebner import DEFAULT_BUDGET, Ideal, buchberger, colon, contains

COMPAT_CAP = 2**20


def _prime_of(field) -> int:
    if not isinstance(field, PrimeField):
        raise FieldMismatch(f"expected coefficients in a prime field, got {field!r}")
    return field.p


def _q(p: int, e: int) -> int:
    if e < 1:
        raise ValueError("e must be at least 1")
    q = p**e
    if q > 2**31:
        raise AlgebraError(f"q = {p}^{e} exceeds the cap 2^31")
    return q


def frobenius_polynomial(f: Polynomial, q: int) -> Polynomial:
    """``f**q`` for ``q`` a power of the characteristic."""
    return Polynomial._raw(f.nvars, {mono.power(m, q): c for m, c in f.terms.items()}, f.field)


def frobenius_power(I: Ideal, e: int = 1) -> Ideal:
    """The ideal generated by the ``p**e``-th powers of the generators of ``I``."""
    q = _q(_prime_of(I.field), e)
    return Ideal([frobenius_polynomial(g, q) for g in I.generators], I.nvars, I.field)


def outside_frobenius_maximal(f: Polynomial, p: int) -> list[tuple[int, ...]]:
    """Support monomials of ``f`` with every exponent at most ``p - 1``."""
    return [m for m in f.terms if all(x < p for x in m)]


@dataclass(frozen=True)
class FedderVerdict:
    p: int
    mode: str
    f_pure: bool
    witness: Optional[Polynomial] = None

    def summary(self, names=None) -> str:
        state = "F-pure" if self.f_pure else "not F-pure"
        if self.witness is None:
            return state
        return f"{state}; witness {self.witness.to_str(names)}"


def truncated_power(f: Polynomial, k: int, p: int) -> dict:
    """Terms of ``f**k`` modulo ``(x_0^p, ..., x_n^p)``.

    Any partial product with an exponent ``>= p`` is dropped at once; such a
    term can only grow under further multiplication.  The power is built one
    factor of ``f`` at a time: the truncated powers are much denser than
    ``f``, so ``k`` sparse products beat ``log k`` dense squarings.
    """
    base = [(m, c) for m, c in f.terms.items() if max(m, default=0) < p]
    result = {mono.one(f.nvars): 1}
    for _ in range(k):
        out: dict = {}
        get = out.get
        for m2, c2 in base:
            for m1, c1 in result.items():
                m = tuple(map(add, m1, m2))
                if max(m) < p:
                    out[m] = get(m, 0) + c1 * c2
        result = {m: c % p for m, c in out.items() if c % p}
        if not result:
            break
    return result


def fedder_hypersurface(f: Polynomial, p: int | None = None) -> FedderVerdict:
    """F-purity of ``GF(p)[x]/(f)`` at the origin: ``f**(p-1)`` escapes ``m^[p]``."""
    fp = _prime_of(f.field)
    if p is not None and p != fp:
        raise FieldMismatch(f"polynomial over GF({fp}) tested at p={p}")
    if not f:
        raise ValueError("the zero polynomial does not define a hypersurface")
    p = fp
    surviving = truncated_power(f, p - 1, p)
    if not surviving:
        return FedderVerdict(p, "hypersurface", False, None)
    order = degrevlex(f.nvars)
    m = max(surviving, key=order.key)
    witness = Polynomial._raw(f.nvars, {m: surviving[m]}, f.field)
    return FedderVerdict(p, "hypersurface", True, witness)


def fedder_general(I: Ideal, p: int | None = None, order: MonomialOrder | None = None,
                   budget: int = DEFAULT_BUDGET) -> FedderVerdict:
    """F-purity of ``GF(p)[x]/I`` at the origin: ``(I^[p] : I)`` escapes ``m^[p]``."""
    fp = _prime_of(I.field)
    if p is not None and p != fp:
        raise FieldMismatch(f"ideal over GF({fp}) tested at p={p}")
    p = fp
    order = order or I.default_order()
    quotient = colon(frobenius_power(I, 1), I, order, budget)
    for g in buchberger(quotient, order, budget).elements:
        if outside_frobenius_maximal(g, p):
            return FedderVerdict(p, "general", True, g)
    return FedderVerdict(p, "general", False, None)


def trace(e: int, g: Polynomial) -> Polynomial:
    """The trace map ``Tr^e``, normalized so that ``x^((q-1)*1)`` maps to 1.

    A monomial ``x^a`` goes to ``x^((a - (q-1))/q)`` when every exponent is
    congruent to ``q - 1`` modulo ``q``, and to 0 otherwise.
    """
    p = _prime_of(g.field)
    q = _q(p, e)
    top = q - 1
    terms = {}
    for m, c in g.terms.items():
        if all(x >= top and (x - top) % q == 0 for x in m):
            terms[tuple((x - top) // q for x in m)] = c
    return Polynomial._raw(g.nvars, terms, g.field)


@dataclass(frozen=True)
class CompatibilityWitness:
    """A map ``Tr^e(u * -)`` sending ``carrier * x^alpha`` outside the ideal."""

    e: int
    u: Polynomial
    alpha: tuple[int, ...]
    carrier: Polynomial
    image: Polynomial


def is_uniformly_compatible(I: Ideal, J: Ideal, p: int | None = None, e: int = 1,
                            cap: int = COMPAT_CAP, order: MonomialOrder | None = None,
                            budget: int = DEFAULT_BUDGET) -> tuple[bool, Optional[CompatibilityWitness]]:
    """Check ``phi(J) in J`` for every ``phi`` of the form ``Tr^e(u * -)``.

    ``u`` runs over the reduced basis of ``(I^[q] : I)``; ``J`` is taken as an
    ideal of the ambient ring and enlarged by ``I``.  Every product
    ``u * x^alpha * g`` with ``alpha`` in the box ``{0..q-1}^n`` and ``g`` in
    the reduced basis of ``J + I`` is traced; the first failure in
    ``(u, alpha, g)`` order is returned as the witness.
    """
    fp = _prime_of(I.field)
    if p is not None and p != fp:
        raise FieldMismatch(f"ideal over GF({fp}) tested at p={p}")
    p = fp
    q = _q(p, e)
    order = order or I.default_order()
    target = J + I
    carriers = buchberger(target, order, budget).elements
    maps = buchberger(colon(frobenius_power(I, e), I, order, budget), order, budget).elements
    size = q**I.nvars * len(maps) * len(carriers)
    if size > cap:
        raise CapExceeded(size, cap, "compatibility check")
    box = list(itertools.product(range(q), repeat=I.nvars))
    for u in maps:
        for alpha in box:
            shifted = u.mul_term(alpha, 1)
            for g in carriers:
                image = trace(e, shifted * g)
                if image and not contains(target, image, order, budget):
                    return False, CompatibilityWitness(e, u, alpha, g, image)
    return True, None
