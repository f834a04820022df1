"""Exact real-root counting and coefficient unimodality."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hooklab.multipoly import MultiPoly, ONE
from hooklab.permstats import eulerian_A, eulerian_B
from hooklab.sturm import sturm_analysis, unimodal

T = MultiPoly.var("t")


def _product_of_roots(roots):
    p = ONE
    for r in roots:
        p = p * (T - MultiPoly.const(Fraction(r)))
    return p


@settings(deadline=None, max_examples=60)
@given(
    st.sets(
        st.fractions(min_value=Fraction(-50), max_value=Fraction(-1, 7), max_denominator=8),
        min_size=1,
        max_size=6,
    )
)
def test_distinct_negative_roots_fully_counted(roots):
    rep = sturm_analysis(_product_of_roots(roots), "t")
    assert rep.real_root_count == len(roots)
    assert rep.all_roots_simple
    assert rep.all_roots_negative


@settings(deadline=None, max_examples=40)
@given(
    st.sets(
        st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=5),
        min_size=1,
        max_size=5,
    )
)
def test_signs_of_roots_detected(roots):
    rep = sturm_analysis(_product_of_roots(roots), "t")
    assert rep.real_root_count == len(roots)
    assert rep.all_roots_negative == all(r < 0 for r in roots)


def test_repeated_root_flagged():
    rep = sturm_analysis((T + 1) ** 2 * (T + 2), "t")
    assert rep.real_root_count == 2  # distinct roots
    assert not rep.all_roots_simple
    assert rep.all_roots_negative


def test_complex_pair_lowers_the_count():
    # (t^2 + t + 1) has no real roots
    rep = sturm_analysis((T**2 + T + 1) * (T + 3), "t")
    assert rep.real_root_count == 1
    assert rep.all_roots_simple
    assert rep.all_roots_negative


def test_zero_root_is_not_negative():
    rep = sturm_analysis(T * (T + 1), "t")
    assert rep.real_root_count == 2
    assert not rep.all_roots_negative


def test_scaling_is_irrelevant():
    p = (T + 2) * (T + 5)
    r1 = sturm_analysis(p, "t")
    r2 = sturm_analysis(p * Fraction(3, 7), "t")
    assert (r1.real_root_count, r1.all_roots_simple, r1.all_roots_negative) == (
        r2.real_root_count,
        r2.all_roots_simple,
        r2.all_roots_negative,
    )


def test_eulerian_polynomials_are_real_rooted():
    # classical fact, an independent workout for the chain on dense polynomials
    for n in range(1, 9):
        for poly in (eulerian_A(n), eulerian_B(n)):
            deg = max(poly.as_univariate("t"))
            rep = sturm_analysis(poly, "t")
            assert rep.real_root_count == deg
            assert rep.all_roots_simple
            assert rep.all_roots_negative


def test_unimodal_scans():
    assert unimodal(ONE + 2 * T + 3 * T**2 + T**3, "t")
    assert unimodal((ONE + T) ** 6, "t")
    assert not unimodal(ONE + T**2, "t")  # internal zero dips
    assert not unimodal(2 + T + 2 * T**2, "t")
    assert unimodal(MultiPoly.const(5), "t")
