"""Squarefree initial-ideal certificates, their search, and prime scans.

A certificate records an order, an optional linear change of variables and
the resulting squarefree initial ideal; :meth:`HerzogCertificate.verify`
recomputes everything from those fields.  The search is a deterministic
enumeration (substitutions outer, orders inner) and can only ever prove
existence: an exhausted search is not a proof that no certificate exists.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import monomial as mono
from .core.fields import GF, RationalField, primes_between
from .core.order import MonomialOrder, degrevlex, lex, weighted
from .core.polynomial import Polynomial
from .core.substitution import LinearSubstitution
from .errors import AlgebraError, BadPrime
from .frobenius import fedder_general, fedder_hypersurface
from .groebner import DEFAULT_BUDGET, Ideal, MonomialIdeal, buchberger, initial_ideal, is_groebner


@dataclass(frozen=True)
class HerzogCertificate:
    order: MonomialOrder
    substitution: Optional[LinearSubstitution]
    initial: MonomialIdeal
    transformed_generators: tuple[Polynomial, ...]

    def verify(self, I: Ideal | None = None, budget: int = DEFAULT_BUDGET) -> bool:
        """Re-derive the certificate from scratch.

        With ``I`` given, the stored generators must also be the image of
        ``I``'s generators under the stored substitution.
        """
        if I is not None:
            expected = [self.substitution(g) if self.substitution else g for g in I.generators]
            if list(self.transformed_generators) != expected:
                return False
        if not self.transformed_generators:
            return False
        fresh = Ideal(self.transformed_generators)
        recomputed = initial_ideal(fresh, self.order, budget)
        return recomputed == self.initial and recomputed.squarefree


def _transform(I: Ideal, s: Optional[LinearSubstitution]) -> Ideal:
    if s is None:
        return I
    return Ideal([s(g) for g in I.generators], I.nvars, I.field)


def herzog_check(I: Ideal, order: MonomialOrder, substitution: Optional[LinearSubstitution] = None,
                 budget: int = DEFAULT_BUDGET) -> Optional[HerzogCertificate]:
    """A certificate when the initial ideal (after ``substitution``) is squarefree."""
    J = _transform(I, substitution)
    ini = initial_ideal(J, order, budget)
    if not ini.squarefree:
        return None
    return HerzogCertificate(order, substitution, ini, J.generators)


@dataclass(frozen=True)
class SearchStrategy:
    """What :func:`herzog_search` enumerates.

    ``orders`` fixes an explicit order list and disables the families.
    Otherwise every variable permutation contributes lex and degrevlex (all
    of them when ``nvars <= permutation_cap``, else ``permutation_samples``
    seeded samples), followed by ``random_weights`` positive weight vectors
    with entries up to ``weight_bound`` refined by degrevlex.  Substitutions
    are the identity, then ``substitutions``, then ``random_substitutions``
    seeded integer matrices with entries from ``entry_pool``.
    """

    orders: tuple[MonomialOrder, ...] = ()
    permutation_cap: int = 7
    permutation_samples: int = 200
    random_weights: int = 0
    weight_bound: int = 20
    include_identity: bool = True
    substitutions: tuple[LinearSubstitution, ...] = ()
    random_substitutions: int = 0
    entry_pool: tuple[int, ...] = (-2, -1, 0, 1, 2)
    seed: int = 0

    def order_list(self, n: int) -> list[MonomialOrder]:
        if self.orders:
            return list(self.orders)
        rng = random.Random(self.seed)
        if n <= self.permutation_cap:
            perms = list(itertools.permutations(range(n)))
        else:
            perms = [tuple(range(n))]
            for _ in range(self.permutation_samples):
                perm = list(range(n))
                rng.shuffle(perm)
                perms.append(tuple(perm))
        out = []
        for perm in perms:
            out.append(lex(n, perm))
            out.append(degrevlex(n, perm))
        for _ in range(self.random_weights):
            w = [rng.randint(1, self.weight_bound) for _ in range(n)]
            out.append(weighted(w, degrevlex(n)))
        return out

    def substitution_list(self, n: int) -> list[Optional[LinearSubstitution]]:
        out: list[Optional[LinearSubstitution]] = [None] if self.include_identity else []
        out.extend(self.substitutions)
        rng = random.Random(f"subs-{self.seed}")
        made = 0
        while made < self.random_substitutions:
            rows = [[rng.choice(self.entry_pool) for _ in range(n)] for _ in range(n)]
            try:
                out.append(LinearSubstitution(rows))
            except AlgebraError:
                continue
            made += 1
        return out


@dataclass
class SearchResult:
    certificate: Optional[HerzogCertificate]
    transcript: list[dict] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.certificate is not None


def _sub_label(s: Optional[LinearSubstitution]) -> str:
    if s is None:
        return "identity"
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in s.matrix) + "]"


def herzog_search(I: Ideal, strategy: SearchStrategy = SearchStrategy(),
                  budget: int = DEFAULT_BUDGET, names: Sequence[str] | None = None) -> SearchResult:
    """First certificate in enumeration order, with a transcript of every attempt."""
    if not isinstance(I.field, RationalField):
        raise AlgebraError("herzog_search works over QQ")
    orders = strategy.order_list(I.nvars)
    transcript: list[dict] = []
    for si, s in enumerate(strategy.substitution_list(I.nvars)):
        J = _transform(I, s)
        for order in orders:
            ini = initial_ideal(J, order, budget)
            entry = {"substitution": si, "matrix": _sub_label(s), "order": order.describe(names)}
            bad = ini.non_squarefree_generators()
            if not bad:
                entry["result"] = "squarefree"
                transcript.append(entry)
                cert = HerzogCertificate(order, s, ini, J.generators)
                return SearchResult(cert, transcript)
            entry["result"] = "not squarefree"
            entry["offending"] = mono.to_str(bad[0], names or [f"x{i}" for i in range(I.nvars)])
            transcript.append(entry)
    return SearchResult(None, transcript)


@dataclass
class Reduction:
    """``I`` read modulo ``p`` through its reduced rational Groebner basis."""

    p: int
    ideal: Optional[Ideal]
    flags: list[str]
    reasons: list[str]

    @property
    def good(self) -> bool:
        return not self.flags


def reduce_ideal_mod_p(I: Ideal, p: int, order: MonomialOrder | None = None,
                       budget: int = DEFAULT_BUDGET) -> Reduction:
    """Reduce the reduced QQ-basis of ``I`` modulo ``p`` and flag what goes wrong.

    ``bad_prime``: ``p`` divides a denominator of an input generator or all of
    its numerators, a denominator of a basis element, or a leading coefficient
    of a basis element's primitive integer form.  ``gb_drift``: the reduced
    elements are no longer a Groebner basis modulo ``p``.
    """
    order = order or I.default_order()
    flags: list[str] = []
    reasons: list[str] = []
    # every offending generator is named, in sorted order, so the report
    # does not depend on how the generators were listed
    for g in I.generators:
        if any(c.denominator % p == 0 for c in g.terms.values()):
            reasons.append(f"denominator of generator {g} divisible by {p}")
        elif all(c.numerator % p == 0 for c in g.terms.values()):
            reasons.append(f"generator {g} vanishes modulo {p}")
    if reasons:
        return Reduction(p, None, ["bad_prime"], sorted(reasons))
    gb = buchberger(I, order, budget)
    reduced = []
    for g in gb.elements:
        lm, _ = g.leading_term(order)
        try:
            prim = g.integer_primitive()
            if int(prim.terms[lm]) % p == 0:
                raise BadPrime(p, f"leading coefficient of {prim} vanishes")
            reduced.append(g.reduce_mod(p))
        except BadPrime as exc:
            flags.append("bad_prime")
            reasons.append(exc.reason)
            return Reduction(p, None, flags, reasons)
    F = GF(p)
    if not is_groebner(reduced, order):
        flags.append("gb_drift")
        reasons.append("reduced basis is not a Groebner basis modulo p")
    return Reduction(p, Ideal(reduced, I.nvars, F), flags, reasons)


@dataclass(frozen=True)
class PrimeScanRecord:
    p: int
    status: str  # f_pure | not_f_pure | bad_prime | error
    witness: str
    elapsed_ms: float

    def payload(self) -> dict:
        return {"p": self.p, "status": self.status, "witness": self.witness}


def _scan_one(args) -> PrimeScanRecord:
    I, p, order, budget, names = args
    start = time.perf_counter()
    try:
        red = reduce_ideal_mod_p(I, p, order, budget)
        if not red.good:
            status, witness = "bad_prime", "; ".join(red.reasons)
        else:
            J = red.ideal
            if len(J.generators) == 1:
                verdict = fedder_hypersurface(J.generators[0])
            else:
                verdict = fedder_general(J, order=order, budget=budget)
            status = "f_pure" if verdict.f_pure else "not_f_pure"
            witness = verdict.witness.to_str(names) if verdict.witness is not None else ""
    except AlgebraError as exc:
        status, witness = "error", str(exc)
    elapsed = (time.perf_counter() - start) * 1000.0
    return PrimeScanRecord(p, status, witness, elapsed)


def prime_scan(I: Ideal, p_min: int, p_max: int, order: MonomialOrder | None = None,
               budget: int = DEFAULT_BUDGET, jobs: int = 1,
               names: Sequence[str] | None = None, skip: Sequence[int] = ()) -> list[PrimeScanRecord]:
    """Fedder verdicts for every prime in ``[p_min, p_max]``, ascending."""
    if p_min > p_max:
        raise ValueError("p_min must not exceed p_max")
    order = order or I.default_order()
    names = list(names) if names is not None else None
    primes = [p for p in primes_between(p_min, p_max) if p not in set(skip)]
    tasks = [(I, p, order, budget, names) for p in primes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_one, tasks))
    return [_scan_one(t) for t in tasks]


@dataclass
class Q12Report:
    classification: str
    inconclusive: bool
    scan: list[PrimeScanRecord]
    search: SearchResult
    note: str

    def payload(self, names=None) -> dict:
        cert = self.search.certificate
        return {
            "classification": self.classification,
            "inconclusive": self.inconclusive,
            "note": self.note,
            "scan": [r.payload() for r in self.scan],
            "certificate": certificate_payload(cert, names) if cert else None,
            "attempts": len(self.search.transcript),
        }


def certificate_payload(cert: HerzogCertificate, names=None) -> dict:
    names = list(names) if names is not None else None
    return {
        "order": cert.order.describe(names),
        "substitution": _sub_label(cert.substitution),
        "initial": cert.initial.to_strs(names),
        "transformed_generators": [g.to_str(names) for g in cert.transformed_generators],
    }


def question12_report(I: Ideal, p_min: int, p_max: int, strategy: SearchStrategy = SearchStrategy(),
                      order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                      names: Sequence[str] | None = None) -> Q12Report:
    """Set the finite prime scan against the certificate search.

    Classification: ``both_hold``, ``both_fail``, ``tension_1_without_2``
    (every good prime F-pure, no certificate found; always inconclusive since
    the search is heuristic) or ``tension_2_without_1`` (a certificate plus a
    concrete good prime where F-purity fails).  A scan without any good prime
    yields ``no_good_primes``.
    """
    scan = prime_scan(I, p_min, p_max, order, budget, jobs, names)
    search = herzog_search(I, strategy, budget, names)
    decided = [r for r in scan if r.status in ("f_pure", "not_f_pure")]
    if not decided:
        return Q12Report("no_good_primes", True, scan, search, "no prime in range had good reduction")
    all_pure = all(r.status == "f_pure" for r in decided)
    if search.found and all_pure:
        return Q12Report("both_hold", False, scan, search, "certificate found; F-pure at every good prime scanned")
    if search.found:
        bad = [r.p for r in decided if r.status == "not_f_pure"]
        return Q12Report("tension_2_without_1", False, scan, search,
                         f"certificate found, yet not F-pure at p in {bad}")
    if all_pure:
        return Q12Report("tension_1_without_2", True, scan, search,
                         "inconclusive: search is heuristic; F-pure at every good prime scanned")
    return Q12Report("both_fail", False, scan, search,
                     "no certificate found by the search; not F-pure at some good prime")
