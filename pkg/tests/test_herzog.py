from fractions import Fraction

from herzogfp.core.fields import GF
from herzogfp.core.order import degrevlex, lex
from herzogfp.core.polynomial import variables
from herzogfp.corpus import (
    case1_change_of_variables,
    case1_order,
    cubic_surface_case1,
    fermat,
    fermat_change_of_variables,
    nonpure_surface,
    rational_normal_curve,
)
from herzogfp.groebner import Ideal, MonomialIdeal
from herzogfp.herzog import (
    SearchStrategy,
    herzog_check,
    herzog_search,
    prime_scan,
    question12_report,
    reduce_ideal_mod_p,
)


def test_herzog_check_twisted_cubic():
    cert = herzog_check(rational_normal_curve(3), lex(4))
    assert cert.initial == MonomialIdeal.from_monomials(4, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)])
    assert cert.verify(rational_normal_curve(3))


def test_herzog_check_fermat_absent():
    I = Ideal([fermat(4)])
    for o in (lex(4), degrevlex(4), lex(4, (3, 2, 1, 0))):
        assert herzog_check(I, o) is None


def test_herzog_check_quadric():
    X, Y, Z = variables(3)
    cert = herzog_check(Ideal([X * Y + Z**2]), lex(3))
    assert cert.initial == MonomialIdeal.from_monomials(3, [(1, 1, 0)])


def test_search_fermat_with_supplied_substitution():
    res = herzog_search(Ideal([fermat(4)]), SearchStrategy(orders=(degrevlex(4),),
                                                          substitutions=(fermat_change_of_variables(),)))
    assert res.found
    cert = res.certificate
    assert cert.substitution == fermat_change_of_variables()
    assert cert.order == degrevlex(4)
    assert cert.initial == MonomialIdeal.from_monomials(4, [(1, 1, 1, 0)])
    assert cert.verify(Ideal([fermat(4)]))
    assert res.transcript[0]["result"] == "not squarefree"


def test_search_square_absent():
    X, = variables(1)
    res = herzog_search(Ideal([X**2]), SearchStrategy(random_substitutions=25, seed=3))
    assert not res.found
    assert len(res.transcript) == 26 * 2


def test_search_case1():
    res = herzog_search(Ideal([cubic_surface_case1()]),
                        SearchStrategy(substitutions=(case1_change_of_variables(),)))
    assert res.found
    assert res.certificate.order == case1_order()
    assert res.certificate.initial == MonomialIdeal.from_monomials(4, [(1, 1, 0, 1)])


def test_search_transcript_deterministic():
    I = Ideal([fermat(3)])
    s = SearchStrategy(random_substitutions=5, random_weights=3, seed=11)
    assert herzog_search(I, s).transcript == herzog_search(I, s).transcript


def test_reduce_mod_p_examples():
    red = reduce_ideal_mod_p(rational_normal_curve(3), 5, lex(4))
    assert red.good
    assert red.ideal.same_ideal(rational_normal_curve(3, GF(5)))
    X, Y = variables(2)
    red = reduce_ideal_mod_p(Ideal([3 * X**2 + Y**2]), 3, lex(2))
    assert red.flags == ["bad_prime"]
    red = reduce_ideal_mod_p(Ideal([Fraction(1, 2) * X + Y]), 2, lex(2))
    assert red.flags == ["bad_prime"] and "denominator" in red.reasons[0]
    red = reduce_ideal_mod_p(Ideal([3 * X + 6 * Y, X * Y]), 3, lex(2))
    assert red.flags == ["bad_prime"] and "vanishes" in red.reasons[0]


def test_prime_scan_examples():
    recs = prime_scan(Ideal([fermat(3)]), 5, 13)
    assert [(r.p, r.status) for r in recs] == [
        (5, "not_f_pure"), (7, "f_pure"), (11, "not_f_pure"), (13, "f_pure")]
    recs = prime_scan(nonpure_surface(), 2, 7, lex(5))
    assert [r.status for r in recs] == ["not_f_pure"] * 4


def test_prime_scan_parallel_matches_serial():
    I = Ideal([fermat(3)])
    a = [r.payload() for r in prime_scan(I, 2, 40)]
    b = [r.payload() for r in prime_scan(I, 2, 40, jobs=2)]
    assert a == b


def test_question12_classifications():
    both = question12_report(Ideal([fermat(4)]), 5, 47,
                             SearchStrategy(orders=(degrevlex(4),), substitutions=(fermat_change_of_variables(),)))
    assert both.classification == "both_hold" and not both.inconclusive
    fail = question12_report(Ideal([fermat(3)]), 5, 13)
    assert fail.classification == "both_fail"
    tension = question12_report(nonpure_surface(), 2, 7, SearchStrategy(orders=(lex(5),)), order=lex(5))
    assert tension.classification == "tension_2_without_1"


def test_question12_inconclusive_branch():
    # every good prime F-pure, but a search without the right substitution finds nothing
    rep = question12_report(Ideal([fermat(4)]), 5, 11, SearchStrategy(orders=(degrevlex(4),)))
    assert rep.classification == "tension_1_without_2" and rep.inconclusive


def test_question12_no_good_primes():
    X, Y = variables(2)
    rep = question12_report(Ideal([Fraction(1, 2) * X * Y]), 2, 2)
    assert rep.classification == "no_good_primes"
