"""Buchberger's algorithm on raw term dictionaries.

Polynomials are ``dict[exponent tuple, int]``.  Over GF(p) the ints are
residues and basis elements are kept monic.  Over QQ the ints are the
coefficients of a primitive integer polynomial; every reduction step rescales
by the smallest factor that keeps the arithmetic integral and then divides out
the content, which keeps coefficient growth in check without fractions.

Pairs are selected by the sugar strategy (smallest phantom homogeneous
degree, then the normal strategy's smallest lcm) and pruned with the
Gebauer-Moeller form of Buchberger's product and chain criteria.  Sugar keeps
lex runs from chasing high-degree S-polynomials whose coefficients explode.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from ..errors import BudgetExceeded

DEFAULT_BUDGET = 50_000

Terms = dict


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class Reducer:
    """Reduction context for one order and one coefficient field.

    ``p`` is the characteristic (``None`` for QQ).  Sort keys are memoized per
    context because the same monomials recur through a whole Groebner run.
    """

    def __init__(self, key: Callable, p: Optional[int]):
        self._key = key
        self.p = p
        self._neg: dict = {}

    def neg_key(self, m):
        k = self._neg.get(m)
        if k is None:
            k = tuple(-x for x in self._key(m))
            self._neg[m] = k
        return k

    def lead(self, f: Terms):
        # smallest negated key = largest monomial
        neg = self.neg_key
        return min(f, key=neg)

    def normalize(self, f: Terms) -> Terms:
        """Monic over GF(p); primitive with positive leading coefficient over QQ."""
        if not f:
            return f
        lc = f[self.lead(f)]
        if self.p is not None:
            if lc == 1:
                return f
            inv = pow(lc, -1, self.p)
            p = self.p
            return {m: c * inv % p for m, c in f.items()}
        g = 0
        for c in f.values():
            g = gcd(g, c)
            if g == 1:
                break
        if lc < 0:
            g = -g
        if g == 1:
            return f
        return {m: c // g for m, c in f.items()}

    def reduce(self, f: Terms, basis, full: bool = True):
        """Divide ``f`` by ``basis``, a list of ``(lm, lc, terms)`` triples.

        Returns ``(remainder, scale)`` where the true remainder (modulo the
        ideal) is ``remainder * scale``; ``scale`` is always 1 over GF(p).
        With ``full=False`` only the leading term is reduced.
        """
        p = self.p
        neg = self.neg_key
        f = dict(f)
        rem: Terms = {}
        scale = Fraction(1)
        heap = [(neg(m), m) for m in f]
        heapq.heapify(heap)
        while heap:
            _, m = heapq.heappop(heap)
            c = f.get(m)
            if c is None:
                continue
            divisor = None
            for entry in basis:
                if _divides(entry[0], m):
                    divisor = entry
                    break
            if divisor is None:
                rem[m] = f.pop(m)
                if not full:
                    rem.update(f)
                    break
                continue
            lm, lc, g = divisor
            q = tuple(y - x for x, y in zip(lm, m))
            if p is not None:
                for gm, gc in g.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    old = f.get(mm)
                    v = ((old or 0) - c * gc) % p
                    if v:
                        if old is None:
                            heapq.heappush(heap, (neg(mm), mm))
                        f[mm] = v
                    elif old is not None:
                        del f[mm]
            else:
                d = gcd(lc, c)
                a, b = lc // d, c // d
                if a < 0:
                    a, b = -a, -b
                if a != 1:
                    for k in f:
                        f[k] *= a
                    for k in rem:
                        rem[k] *= a
                    scale /= a
                for gm, gc in g.items():
                    mm = tuple(x + y for x, y in zip(gm, q))
                    old = f.get(mm)
                    v = (old or 0) - b * gc
                    if v:
                        if old is None:
                            heapq.heappush(heap, (neg(mm), mm))
                        f[mm] = v
                    elif old is not None:
                        del f[mm]
                content = 0
                for v in f.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content != 1:
                    for v in rem.values():
                        content = gcd(content, v)
                        if content == 1:
                            break
                if content > 1:
                    for k in f:
                        f[k] //= content
                    for k in rem:
                        rem[k] //= content
                    scale *= content
        return rem, scale

    def spoly(self, f: Terms, lmf, g: Terms, lmg) -> Terms:
        L = _lcm(lmf, lmg)
        qf = tuple(x - y for x, y in zip(L, lmf))
        qg = tuple(x - y for x, y in zip(L, lmg))
        cf, cg = f[lmf], g[lmg]
        p = self.p
        out: Terms = {}
        if p is not None:
            a, b = cg, cf
        else:
            d = gcd(cf, cg)
            a, b = cg // d, cf // d
        for m, c in f.items():
            mm = tuple(x + y for x, y in zip(m, qf))
            out[mm] = c * a
        for m, c in g.items():
            mm = tuple(x + y for x, y in zip(m, qg))
            v = out.get(mm, 0) - c * b
            if p is not None:
                v %= p
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        if p is not None:
            out = {m: c % p for m, c in out.items() if c % p}
        return out


class _State:
    """Mutable bookkeeping for one Buchberger run."""

    def __init__(self, reducer: Reducer):
        self.r = reducer
        self.polys: list[Terms] = []
        self.lms: list = []
        self.sugar: list[int] = []
        self.active: list[int] = []
        self.pairs: dict = {}

    def basis_triples(self):
        return [(self.lms[i], self.polys[i][self.lms[i]], self.polys[i]) for i in self.active]

    def pair_sugar(self, a: int, b: int, L) -> int:
        d = sum(L)
        return max(self.sugar[a] + d - sum(self.lms[a]), self.sugar[b] + d - sum(self.lms[b]))

    def update(self, h: Terms, sugar: int) -> None:
        """Gebauer-Moeller installation of a new basis element ``h``."""
        r = self.r
        hi = len(self.polys)
        lmh = r.lead(h)
        self.polys.append(h)
        self.lms.append(lmh)
        self.sugar.append(max(sugar, sum(lmh)))
        lms = self.lms

        cand = [(g, _lcm(lmh, lms[g])) for g in self.active]
        kept = []
        for idx, (g, L) in enumerate(cand):
            if _coprime(lmh, lms[g]):
                kept.append((g, L))
                continue
            dominated = False
            for g2, L2 in cand[idx + 1:]:
                if _divides(L2, L):
                    dominated = True
                    break
            if not dominated:
                for g2, L2 in kept:
                    if _divides(L2, L):
                        dominated = True
                        break
            if not dominated:
                kept.append((g, L))
        new_pairs = {(g, hi): (L, self.pair_sugar(g, hi, L)) for g, L in kept if not _coprime(lmh, lms[g])}

        survivors = {}
        for (a, b), (L, sug) in self.pairs.items():
            if (
                not _divides(lmh, L)
                or _lcm(lms[a], lmh) == L
                or _lcm(lmh, lms[b]) == L
            ):
                survivors[(a, b)] = (L, sug)
        survivors.update(new_pairs)
        self.pairs = survivors
        self.active = [g for g in self.active if not _divides(lmh, lms[g])] + [hi]

    def pop_pair(self):
        neg = self.r.neg_key
        pairs = self.pairs
        best = min(pairs, key=lambda ab: (pairs[ab][1], sum(pairs[ab][0]), neg(pairs[ab][0]), ab))
        _, sug = pairs.pop(best)
        return best, sug


def groebner(polys: list[Terms], key: Callable, p: Optional[int], budget: int = DEFAULT_BUDGET) -> list[Terms]:
    """Reduced Groebner basis of the ideal spanned by ``polys``.

    Over GF(p) the result is monic with int residues; over QQ it is returned
    with monic :class:`~fractions.Fraction` coefficients.
    """
    r = Reducer(key, p)
    st = _State(r)
    for f in polys:
        if p is not None:
            f = {m: c % p for m, c in f.items() if c % p}
        else:
            f = {m: c for m, c in f.items() if c}
        if not f:
            continue
        rem, _ = r.reduce(f, st.basis_triples())
        if rem:
            st.update(r.normalize(rem), max(sum(m) for m in f))
    reductions = 0
    while st.pairs:
        (a, b), sug = st.pop_pair()
        reductions += 1
        if reductions > budget:
            raise BudgetExceeded(budget)
        s = r.spoly(st.polys[a], st.lms[a], st.polys[b], st.lms[b])
        if not s:
            continue
        rem, _ = r.reduce(s, st.basis_triples())
        if rem:
            st.update(r.normalize(rem), sug)
    return interreduce([st.polys[i] for i in st.active], r)


def interreduce(polys: list[Terms], r: Reducer) -> list[Terms]:
    """Turn a Groebner basis into the reduced one, sorted by decreasing leading monomial."""
    items = [(r.lead(f), f) for f in polys if f]
    minimal = []
    for i, (lm, f) in enumerate(items):
        if any(
            _divides(lm2, lm) and (lm2 != lm or j < i)
            for j, (lm2, _) in enumerate(items)
            if j != i
        ):
            continue
        minimal.append((lm, f))
    out = []
    for i, (lm, f) in enumerate(minimal):
        others = [(lm2, g[lm2], g) for j, (lm2, g) in enumerate(minimal) if j != i]
        lc = f[lm]
        tail = {m: c for m, c in f.items() if m != lm}
        rem, scale = r.reduce(tail, others)
        out.append(_finish(lm, lc, rem, scale, r.p))
    out.sort(key=lambda f: r.neg_key(r.lead(f)))
    return out


def _finish(lm, lc, rem: Terms, scale, p):
    # lead term plus reduced tail, made monic in the target field
    if p is not None:
        inv = pow(lc, -1, p)
        out = {lm: 1}
        for m, c in rem.items():
            out[m] = c * inv % p
        return out
    out = {lm: Fraction(1)}
    for m, c in rem.items():
        out[m] = c * scale / lc
    return out


def normal_form(f: Terms, basis: list[Terms], key: Callable, p: Optional[int]) -> Terms:
    """Exact remainder of ``f`` on division by ``basis`` (any coefficient type)."""
    r = Reducer(key, p)
    if p is not None:
        triples = [(r.lead(g), g[r.lead(g)], g) for g in basis if g]
        # monic divisors keep the mod-p reduction exact
        triples = [(lm, 1, {m: c * pow(lc, -1, p) % p for m, c in g.items()}) for lm, lc, g in triples]
        rem, _ = r.reduce({m: c % p for m, c in f.items() if c % p}, triples)
        return rem
    # Rational input: clear denominators into integers, reduce, rescale.
    den = 1
    for c in f.values():
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    fi = {m: int(Fraction(c) * den) for m, c in f.items() if c}
    triples = []
    for g in basis:
        if not g:
            continue
        gd = 1
        for c in g.values():
            gd = gd * Fraction(c).denominator // gcd(gd, Fraction(c).denominator)
        gi = {m: int(Fraction(c) * gd) for m, c in g.items()}
        lm = r.lead(gi)
        triples.append((lm, gi[lm], gi))
    rem, scale = r.reduce(fi, triples)
    return {m: Fraction(c) * scale / den for m, c in rem.items()}


def is_groebner(basis: list[Terms], key: Callable, p: Optional[int]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    r = Reducer(key, p)
    ints = []
    for g in basis:
        if not g:
            continue
        if p is None:
            gd = 1
            for c in g.values():
                gd = gd * Fraction(c).denominator // gcd(gd, Fraction(c).denominator)
            g = {m: int(Fraction(c) * gd) for m, c in g.items()}
        ints.append(g)
    triples = [(r.lead(g), g[r.lead(g)], g) for g in ints]
    for i in range(len(triples)):
        for j in range(i + 1, len(triples)):
            lmi, _, gi = triples[i]
            lmj, _, gj = triples[j]
            s = r.spoly(gi, lmi, gj, lmj)
            if s and r.reduce(s, triples)[0]:
                return False
    return True
