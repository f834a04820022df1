"""Truncated power series: algebra, exp/log, q-objects, eta products."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hooklab.errors import BadConstantTerm, DivisionByNonUnit
from hooklab.multipoly import MultiPoly, RatFunc
from hooklab.partitions import partition_count, partition_list
from hooklab.series import (
    TruncatedSeries,
    binomial_poly,
    binomial_series,
    eta_product,
    gaussian_binomial,
    geometric,
    pochhammer,
    qpoch_poly,
)

ORD = 12


def from_ints(vals, order=ORD):
    vals = list(vals) + [0] * (order + 1 - len(vals))
    return TruncatedSeries("x", order, [Fraction(v) for v in vals[: order + 1]])


def test_basic_algebra():
    s = from_ints([1, 2, 3])
    t = from_ints([0, 1])
    assert (s + t).poly_coefficient(1).as_fraction() == 3
    assert (s - s).is_zero()
    assert (s * t).poly_coefficient(1).as_fraction() == 1
    assert (s * t).poly_coefficient(3).as_fraction() == 3


def test_geometric_inverts_one_minus_x():
    one_minus = from_ints([1, -1])
    assert (geometric("x", ORD) * one_minus).first_difference(from_ints([1])) is None


def test_division_roundtrip():
    a = from_ints([1, 5, -2, 7])
    b = from_ints([1, -3, 3, 0, 2])
    assert ((a * b) / b).first_difference(a) is None


def test_division_needs_unit_constant_term():
    with pytest.raises(DivisionByNonUnit):
        from_ints([1]) / from_ints([0, 1])


rational_lists = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=0, max_size=6
)


@settings(deadline=None)
@given(rational_lists)
def test_log_exp_roundtrip(vals):
    s = TruncatedSeries("x", 10, [Fraction(0)] + [Fraction(v) for v in vals])
    assert s.exp().log().first_difference(s) is None


@settings(deadline=None)
@given(rational_lists, rational_lists)
def test_exp_turns_sums_into_products(u, v):
    a = TruncatedSeries("x", 8, [Fraction(0)] + [Fraction(x) for x in u])
    b = TruncatedSeries("x", 8, [Fraction(0)] + [Fraction(x) for x in v])
    assert ((a + b).exp()).first_difference(a.exp() * b.exp()) is None


def test_exp_requires_zero_constant_term():
    with pytest.raises(BadConstantTerm):
        from_ints([1, 1]).exp()
    with pytest.raises(BadConstantTerm):
        from_ints([0, 1]).log()


def test_from_poly_and_coefficient_views():
    t = MultiPoly.var("t")
    p = 3 * t**2 + t + 2
    s = TruncatedSeries.from_poly(p, "t", "x", ORD)
    assert s.poly_coefficient(0).as_fraction() == 2
    assert s.poly_coefficient(2).as_fraction() == 3
    assert s.coefficient(5) == RatFunc.coerce(0)


def test_first_difference_reports_smallest_order():
    a = from_ints([1, 2, 3, 4])
    b = from_ints([1, 2, 9, 4])
    assert a.first_difference(b) == 2
    assert a.first_difference(a) is None


# ----- named series ---------------------------------------------------------------


def test_pentagonal_number_expansion():
    # prod (1 - x^j) has +-1 coefficients exactly at k(3k+-1)/2
    euler = eta_product([(1, 0, -1)], 20)
    expected = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
    for n in range(21):
        assert euler.poly_coefficient(n).as_fraction() == expected.get(n, 0)


def test_partition_generating_series_two_ways():
    gf = eta_product([(1, 0, 1)], 25)
    for n in range(26):
        assert gf.poly_coefficient(n).as_fraction() == partition_count(n)
    # and the recurrence agrees with raw enumeration
    for n in range(12):
        assert partition_count(n) == len(partition_list(n))


def test_binomial_series_is_group_like():
    t = MultiPoly.var("t")
    up = binomial_series(t, "x", 10)
    down = binomial_series(-t, "x", 10)
    prod = up * down
    assert prod.poly_coefficient(0).is_one()
    assert all(prod.poly_coefficient(n).is_zero() for n in range(1, 11))


def test_binomial_series_integer_exponent_matches_binomials():
    s = binomial_series(MultiPoly.const(3), "x", 8)
    # (1-x)^-3 has coefficients C(n+2, 2)
    for n in range(9):
        assert s.poly_coefficient(n).as_fraction() == math.comb(n + 2, 2)


def test_binomial_poly_spot():
    t = MultiPoly.var("t")
    assert binomial_poly(t, 2) == t * (t - 1) * Fraction(1, 2)
    assert binomial_poly(MultiPoly.const(5), 3).as_fraction() == 10


def _box_partition_gf(k, m):
    """Size generating function of partitions in a k x m box, by direct DP.

    Split on the number of parts: fewer than k (drop a row) or exactly k
    (strip the first column, costing q^k).
    """
    table = [[None] * (m + 1) for _ in range(k + 1)]
    for a in range(k + 1):
        for b in range(m + 1):
            if a == 0 or b == 0:
                table[a][b] = {0: 1}
            else:
                merged = dict(table[a - 1][b])
                for exp, c in table[a][b - 1].items():
                    merged[exp + a] = merged.get(exp + a, 0) + c
                table[a][b] = merged
    return table[k][m]


def test_gaussian_binomial_counts_box_partitions():
    for n in range(9):
        for k in range(n + 1):
            gb = gaussian_binomial(n, k)
            box = _box_partition_gf(k, n - k)
            dense = {e: int(c) for e, c in enumerate(gb.dense_coeffs("q")) if c}
            assert dense == {e: c for e, c in box.items() if c}


def test_gaussian_binomial_symmetry_and_unit():
    for n in range(9):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == gaussian_binomial(n, n - k)
            assert gaussian_binomial(n, k).subs("q", 1).as_fraction() == math.comb(n, k)


def test_qpoch_recurrence():
    q = MultiPoly.var("q")
    for n in range(8):
        assert qpoch_poly(n + 1) == qpoch_poly(n) * (1 - q ** (n + 1))


def test_pochhammer_finite_product():
    q = TruncatedSeries.monomial("x", 10, 1)
    a = TruncatedSeries.monomial("x", 10, 1)
    # (x; x)_3 = (1-x)(1-x^2)(1-x^3)
    lhs = pochhammer(a, q, 3, 10)
    rhs = from_ints([1, -1], 10) * from_ints([1, 0, -1], 10) * from_ints(
        [1, 0, 0, -1], 10
    )
    assert lhs.first_difference(rhs) is None


def test_eta_product_with_offset_and_plus_sign():
    # prod 1/(1 + x^(2j-1)) via the negated factor form
    s = eta_product([(2, 1, 1, True)], 10)
    direct = TruncatedSeries.const(1, "x", 10)
    for j in range(1, 11):
        off = 2 * j - 1
        if off > 10:
            break
        direct = direct / (
            TruncatedSeries.const(1, "x", 10) + TruncatedSeries.monomial("x", 10, off)
        )
    assert s.first_difference(direct) is None


def test_polynomial_exponent_eta_factor():
    t = MultiPoly.var("t")
    # prod (1-x^j)^(-(t+1)) at t=0 collapses to the partition series
    s = eta_product([(1, 0, t + 1)], 10)
    at0 = TruncatedSeries(
        "x", 10, [s.poly_coefficient(n).subs("t", 0) for n in range(11)]
    )
    assert at0.first_difference(eta_product([(1, 0, 1)], 10)) is None


def test_render_smoke():
    assert "x" in geometric("x", 4).render()
