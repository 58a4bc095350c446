"""Plane cubics over finite fields: point counts, supersingularity and the Fedder cross-check."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt
from typing import Optional

import numpy as np

from .core.fields import PrimeField, RationalField, primes_between
from .core.polynomial import Polynomial
from .errors import AlgebraError, BadPrime, SingularReduction
from .frobenius import fedder_hypersurface
from .groebner import Ideal, projective_empty

DEFAULT_P_MAX = 499
NO_RATIONAL_POINT_NOTE = "criterion applied to the Jacobian implicitly"


def jacobian_ideal(f: Polynomial) -> Ideal:
    return Ideal([f] + [f.partial_derivative(i) for i in range(f.nvars)], f.nvars, f.field)


def is_nonsingular(f: Polynomial) -> bool:
    """Smoothness of the projective hypersurface ``f = 0`` over the algebraic closure."""
    return projective_empty(jacobian_ideal(f))


def _small_rational_point(f: Polynomial, bound: int = 3) -> Optional[tuple[int, int, int]]:
    rng = range(-bound, bound + 1)
    for pt in itertools.product(rng, repeat=3):
        if any(pt) and f.evaluate(pt) == 0:
            return pt
    return None


@dataclass(frozen=True)
class PlaneCubic:
    f: Polynomial
    nonsingular: bool
    rational_point: Optional[tuple[int, int, int]] = None

    @property
    def note(self) -> str:
        return "" if self.rational_point is not None else NO_RATIONAL_POINT_NOTE


def analyze_cubic(f: Polynomial) -> PlaneCubic:
    if not isinstance(f.field, RationalField):
        raise AlgebraError("analyze_cubic expects rational coefficients")
    if f.nvars != 3:
        raise AlgebraError(f"a plane cubic needs 3 variables, got {f.nvars}")
    if not f.is_homogeneous() or f.total_degree() != 3:
        raise AlgebraError("a plane cubic must be homogeneous of degree 3")
    return PlaneCubic(f, is_nonsingular(f), _small_rational_point(f))


def reduce_good(f: Polynomial, p: int) -> Polynomial:
    """``f`` modulo ``p``; raises BadPrime or SingularReduction when reduction is bad."""
    fp = f if isinstance(f.field, PrimeField) else f.reduce_mod(p)
    if fp.total_degree() != f.total_degree() or not fp.is_homogeneous():
        raise BadPrime(p, "degree drops modulo p")
    if not is_nonsingular(fp):
        raise SingularReduction(p)
    return fp


def _count_zeros(fp: Polynomial, p: int) -> int:
    # All points of P^2(F_p) as canonical representatives [1:y:z], [0:1:z], [0:0:1].
    ys, zs = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing="ij")
    ys, zs = ys.ravel(), zs.ravel()
    pts = [
        (np.ones_like(ys), ys, zs),
        (np.zeros(p, dtype=np.int64), np.ones(p, dtype=np.int64), np.arange(p, dtype=np.int64)),
        (np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64)),
    ]
    total = 0
    for coords in pts:
        acc = np.zeros_like(coords[0])
        for m, c in fp.terms.items():
            term = np.full_like(coords[0], int(c) % p)
            for x, e in zip(coords, m):
                if e:
                    term = term * (np.power(x, e) % p) % p
            acc = (acc + term) % p
        total += int(np.count_nonzero(acc == 0))
    return total


def count_points(f: Polynomial, p: int) -> int:
    """Number of ``GF(p)``-points of the projective curve ``f = 0`` (good reduction only)."""
    if f.nvars != 3:
        raise AlgebraError("count_points needs a ternary form")
    fp = reduce_good(f, p)
    return _count_zeros(fp, p)


@dataclass(frozen=True)
class PointCountRecord:
    p: int
    count: Optional[int]
    a_p: Optional[int]
    supersingular: Optional[bool]
    skipped: str = ""

    @property
    def good(self) -> bool:
        return not self.skipped

    def hasse_ok(self) -> bool:
        return self.a_p is None or self.a_p * self.a_p <= 4 * self.p

    def payload(self) -> dict:
        return {
            "p": self.p,
            "count": self.count,
            "a_p": self.a_p,
            "supersingular": self.supersingular,
            "skipped": self.skipped,
        }


def point_record(f: Polynomial, p: int) -> PointCountRecord:
    try:
        n = count_points(f, p)
    except (BadPrime, SingularReduction) as exc:
        return PointCountRecord(p, None, None, None, skipped=str(exc))
    a = p + 1 - n
    return PointCountRecord(p, n, a, a % p == 0)


def is_supersingular(c: PlaneCubic | Polynomial, p: int) -> bool:
    f = c.f if isinstance(c, PlaneCubic) else c
    a = p + 1 - count_points(f, p)
    return a % p == 0


def supersingular_scan(c: PlaneCubic, p_max: int = DEFAULT_P_MAX, p_min: int = 2) -> list[PointCountRecord]:
    """One record per prime up to ``p_max``; bad primes carry a skip reason."""
    if not c.nonsingular:
        raise AlgebraError("supersingular_scan needs a nonsingular cubic")
    return [point_record(c.f, p) for p in primes_between(p_min, p_max)]


@dataclass(frozen=True)
class CrosscheckRow:
    p: int
    supersingular: bool
    fedder_f_pure: bool
    consistent: bool

    def payload(self) -> dict:
        return {
            "p": self.p,
            "supersingular": self.supersingular,
            "fedder_f_pure": self.fedder_f_pure,
            "consistent": self.consistent,
        }


def crosscheck_fedder(c: PlaneCubic, p_max: int = DEFAULT_P_MAX, p_min: int = 2) -> list[CrosscheckRow]:
    """Compare brute-force supersingularity with Fedder's criterion at each good prime.

    The cone over an elliptic curve is F-pure exactly when the curve is
    ordinary, so every row should have ``fedder_f_pure != supersingular``.
    """
    rows = []
    for rec in supersingular_scan(c, p_max, p_min):
        if not rec.good:
            continue
        pure = fedder_hypersurface(c.f.reduce_mod(rec.p)).f_pure
        rows.append(CrosscheckRow(rec.p, bool(rec.supersingular), pure, pure != rec.supersingular))
    return rows


def hasse_bound_holds(rec: PointCountRecord) -> bool:
    if rec.a_p is None:
        return True
    return abs(rec.a_p) <= 2 * isqrt(rec.p) + 2 and rec.a_p * rec.a_p <= 4 * rec.p
