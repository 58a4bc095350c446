"""Seeded randomized suites; each runs at least 500 cases and tolerates no failure."""

import itertools
import random

from conftest import random_polynomial

from herzogfp.cli.parsing import parse_polynomial
from herzogfp.core import monomial as mono
from herzogfp.core import order as orders
from herzogfp.core.fields import GF, QQ
from herzogfp.core.polynomial import Polynomial
from herzogfp.core.substitution import LinearSubstitution
from herzogfp.elliptic import analyze_cubic, count_points, hasse_bound_holds, point_record
from herzogfp.errors import BadPrime, InvalidOrder, SingularReduction
from herzogfp.frobenius import fedder_general, fedder_hypersurface, frobenius_polynomial, trace
from herzogfp.groebner import Ideal, buchberger, colon, initial_ideal, normal_form
from herzogfp.herzog import prime_scan, reduce_ideal_mod_p

CASES = 500


def random_order(rng: random.Random, n: int):
    kind = rng.randrange(5)
    perm = list(range(n))
    rng.shuffle(perm)
    if kind == 0:
        return orders.lex(n, perm)
    if kind == 1:
        return orders.degrevlex(n, perm)
    if kind == 2:
        cut = rng.randint(1, n - 1)
        return orders.block(n, [(rng.choice(["lex", "degrevlex"]), perm[:cut]),
                                (rng.choice(["lex", "degrevlex"]), perm[cut:])])
    if kind == 3:
        return orders.weighted([rng.randint(1, 5) for _ in range(n)], orders.degrevlex(n))
    while True:
        rows = [[rng.randint(0, 3) for _ in range(n)] for _ in range(n)]
        try:
            return orders.matrix(rows)
        except InvalidOrder:
            continue


def s_polynomial(f, g, order):
    (a, ca), (b, cb) = f.leading_term(order), g.leading_term(order)
    m = mono.lcm(a, b)
    F = f.field
    return f.mul_term(mono.div(m, a), F.inv(ca)) - g.mul_term(mono.div(m, b), F.inv(cb))


def random_field(rng):
    return rng.choice([QQ, GF(2), GF(3), GF(5), GF(7), GF(32003)])


def test_buchberger_criterion_on_emitted_bases():
    rng = random.Random(1)
    for case in range(CASES):
        n = rng.randint(2, 3)
        F = random_field(rng)
        order = random_order(rng, n)
        gens = [random_polynomial(rng, n, 3, 3, F, coeffs=range(-2, 3)) for _ in range(rng.randint(1, 3))]
        gb = buchberger(Ideal(gens, n, F), order)
        elems = list(gb.elements)
        for f, g in itertools.combinations(elems, 2):
            assert not normal_form(s_polynomial(f, g, order), elems, order), case
        for g in gens:
            assert not normal_form(g, elems, order), case
        lead = [e.leading_monomial(order) for e in elems]
        for i, e in enumerate(elems):
            assert e.leading_term(order)[1] == F.one
            others = lead[:i] + lead[i + 1:]
            assert not any(mono.divides(l, m) for m in e.terms for l in others), case


def test_reduced_basis_canonical_under_shuffle_and_augment():
    rng = random.Random(2)
    for case in range(CASES):
        n = rng.randint(2, 3)
        F = random_field(rng)
        order = random_order(rng, n)
        gens = [random_polynomial(rng, n, 3, 3, F, coeffs=range(-2, 3)) for _ in range(rng.randint(1, 3))]
        base = buchberger(Ideal(gens, n, F), order).elements
        shuffled = gens[:]
        rng.shuffle(shuffled)
        extra = sum((random_polynomial(rng, n, 1, 2, F) * g for g in gens), Polynomial.zero(n, F))
        again = buchberger(Ideal(shuffled + [extra], n, F), order).elements
        assert set(base) == set(again), case


def test_substitution_round_trip():
    rng = random.Random(3)
    for case in range(CASES):
        n = rng.randint(2, 4)
        F = rng.choice([QQ, GF(5), GF(101)])
        while True:
            try:
                s = LinearSubstitution([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)], F)
                break
            except Exception:
                continue
        f = random_polynomial(rng, n, 3, 5, F)
        assert s.inverse()(s(f)) == f, case
        assert s(s.inverse()(f)) == f, case
        g = random_polynomial(rng, n, 2, 3, F)
        assert s(f * g) == s(f) * s(g) and s(f + g) == s(f) + s(g), case


def test_monomial_order_axioms():
    rng = random.Random(4)
    for case in range(CASES):
        n = rng.randint(2, 5)
        order = random_order(rng, n)
        ms = [tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(3)]
        a, b, c = ms
        one = mono.one(n)
        # total and antisymmetric
        assert order.compare(a, b) == -order.compare(b, a), case
        assert (order.compare(a, b) == 0) == (a == b), case
        # 1 is the smallest monomial
        assert a == one or order.compare(one, a) == -1, case
        # multiplicative
        assert order.compare(mono.mul(a, c), mono.mul(b, c)) == order.compare(a, b), case
        # transitive
        ranked = sorted(ms, key=order.key)
        assert all(order.compare(x, y) <= 0 for x, y in zip(ranked, ranked[1:])), case
        # divisibility implies order
        assert order.compare(mono.mul(a, c), a) >= 0, case


def test_trace_q_linearity_and_iteration():
    rng = random.Random(5)
    for case in range(CASES):
        p = rng.choice([2, 3, 5])
        F = GF(p)
        n = rng.randint(1, 3)
        e = rng.randint(1, 2)
        q = p**e
        a = random_polynomial(rng, n, 2, 2, F)
        b = random_polynomial(rng, n, 2, 2, F)
        f = random_polynomial(rng, n, 3 * q, 6, F)
        g = random_polynomial(rng, n, 3 * q, 6, F)
        lhs = trace(e, frobenius_polynomial(a, q) * f + frobenius_polynomial(b, q) * g)
        assert lhs == a * trace(e, f) + b * trace(e, g), case
        h = random_polynomial(rng, n, p * p * 3, 6, F)
        assert trace(1, trace(1, h)) == trace(2, h), case


def test_fedder_general_matches_hypersurface():
    rng = random.Random(6)
    for case in range(CASES):
        p = rng.choice([2, 3, 5])
        F = GF(p)
        n = rng.randint(2, 3)
        f = random_polynomial(rng, n, 3, 4, F)
        if not f or f.total_degree() == 0:
            continue
        assert fedder_general(Ideal([f], n, F)).f_pure == fedder_hypersurface(f).f_pure, (case, f)


def random_cubic(rng):
    return random_polynomial(rng, 3, 3, 6, QQ, coeffs=range(-3, 4), homogeneous=3)


def test_hasse_bound_on_point_counts():
    rng = random.Random(7)
    primes = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    checked = 0
    while checked < CASES:
        f = random_cubic(rng)
        if not analyze_cubic(f).nonsingular:
            continue
        rec = point_record(f, rng.choice(primes))
        if rec.good:
            assert hasse_bound_holds(rec), (f, rec)
            checked += 1


def _monomial_colon_oracle(jm, im, n, degree):
    inside = lambda m: any(mono.divides(a, m) for a in jm)
    return {m for m in itertools.product(range(degree + 1), repeat=n)
            if sum(m) <= degree and all(inside(mono.mul(m, b)) for b in im)}


def test_colon_against_degree_bounded_oracle():
    rng = random.Random(8)
    for case in range(CASES):
        n = rng.randint(2, 3)
        F = rng.choice([QQ, GF(2), GF(3)])
        rand_mono = lambda: tuple(rng.randint(0, 3) for _ in range(n))
        jm = mono.minimalize([rand_mono() for _ in range(rng.randint(1, 4))])
        im = mono.minimalize([rand_mono() for _ in range(rng.randint(1, 3))])
        J = Ideal([Polynomial.monomial(m, 1, F) for m in jm], n, F)
        I = Ideal([Polynomial.monomial(m, 1, F) for m in im], n, F)
        Q = colon(J, I)
        oracle = _monomial_colon_oracle(jm, im, n, 6)
        qmons = [g.leading_monomial(orders.degrevlex(n)) for g in buchberger(Q, orders.degrevlex(n)).elements]
        for m in itertools.product(range(7), repeat=n):
            if sum(m) <= 6:
                got = any(mono.divides(a, m) for a in qmons)
                assert got == (m in oracle), (case, jm, im, m)


def test_squarefree_monomial_ideals_are_f_pure():
    rng = random.Random(9)
    for case in range(CASES):
        n = rng.randint(2, 4)
        p = rng.choice([2, 3, 5])
        F = GF(p)
        gens = {tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(rng.randint(1, 4))}
        gens.discard(mono.one(n))
        if not gens:
            continue
        I = Ideal([Polynomial.monomial(m, 1, F) for m in gens], n, F)
        assert fedder_general(I).f_pure, (case, gens)


def test_parse_print_round_trip():
    rng = random.Random(10)
    names = ["x", "y", "z", "w"]
    for case in range(2 * CASES):
        F = rng.choice([QQ, GF(7), GF(2)])
        f = random_polynomial(rng, 4, 5, 6, F, coeffs=range(-9, 10))
        if F == QQ and rng.random() < 0.5:
            f = f.scale(QQ.convert(1) / rng.randint(2, 9))
        text = f.to_str(names)
        g = parse_polynomial(text, names, F)
        assert g == f, (case, text)
        assert g.to_str(names) == text


def test_count_points_invariant_under_substitution():
    rng = random.Random(11)
    checked = 0
    while checked < CASES:
        f = random_cubic(rng)
        p = rng.choice([5, 7, 11, 13])
        try:
            n = count_points(f, p)
        except (BadPrime, SingularReduction):
            continue
        while True:
            try:
                s = LinearSubstitution([[rng.randint(0, p - 1) for _ in range(3)] for _ in range(3)], GF(p))
                break
            except Exception:
                continue
        g = s(f.reduce_mod(p)).lift()
        assert count_points(g, p) == n, (f, p)
        checked += 1


def test_scan_invariant_under_generator_permutation():
    rng = random.Random(12)
    for case in range(CASES // 10):
        n = 3
        gens = [random_polynomial(rng, n, 2, 3, QQ, coeffs=range(-2, 3), homogeneous=2) for _ in range(3)]
        I = Ideal(gens, n, QQ)
        perm = gens[:]
        rng.shuffle(perm)
        J = Ideal(perm, n, QQ)
        a = [r.payload() for r in prime_scan(I, 2, 11)]
        b = [r.payload() for r in prime_scan(J, 2, 11)]
        assert a == b, case


def test_good_prime_initial_ideal_agreement():
    rng = random.Random(13)
    for case in range(CASES):
        n = rng.randint(2, 3)
        order = random_order(rng, n)
        gens = [random_polynomial(rng, n, 3, 3, QQ, coeffs=range(-4, 5)) for _ in range(rng.randint(1, 3))]
        I = Ideal(gens, n, QQ)
        p = rng.choice([2, 3, 5, 7, 11])
        red = reduce_ideal_mod_p(I, p, order)
        if not red.good:
            continue
        assert initial_ideal(red.ideal, order) == initial_ideal(I, order), case


def test_lex_bases_of_inhomogeneous_ideals():
    """Basis is inside the ideal, generates it, passes the S-pair check and is reduced."""
    rng = random.Random(14)
    for case in range(CASES):
        n = rng.randint(2, 3)
        F = rng.choice([QQ, GF(3), GF(7), GF(101)])
        order = orders.lex(n, rng.sample(range(n), n))
        gens = [random_polynomial(rng, n, 3, 4, F, coeffs=range(-2, 3)) for _ in range(n)]
        I = Ideal(gens, n, F)
        elems = list(buchberger(I, order).elements)
        source = buchberger(I, orders.degrevlex(n))
        assert all(not normal_form(g, source) for g in elems), case
        assert all(not normal_form(g, elems, order) for g in gens), case
        for f, g in itertools.combinations(elems, 2):
            assert not normal_form(s_polynomial(f, g, order), elems, order), case
        lead = [e.leading_monomial(order) for e in elems]
        for i, e in enumerate(elems):
            assert e.leading_term(order)[1] == F.one, case
            others = lead[:i] + lead[i + 1:]
            assert not any(mono.divides(l, m) for m in e.terms for l in others), case
