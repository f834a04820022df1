"""Partition-indexed generating functions and standalone finite identities.

Everything here returns exact objects: series in x whose coefficients are
rational functions (usually plain polynomials) in the coefficient variables,
or single rational numbers for the finite identities.  Partition sums always
iterate in the reverse-lexicographic enumeration order so that any
coefficient can be traced back to the partitions that produced it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NotSquare, WeightEvaluationError
from .multipoly import MultiPoly, ONE, RatFunc, RF_ONE, RF_ZERO, VAR_INDEX
from .partitions import (
    CellStats,
    Partition,
    cell_stats,
    partition_list,
)
from .permstats import CycleType, cycle_types
from .series import (
    TruncatedSeries,
    binomial_poly,
    eta_product,
    gaussian_binomial,
    geometric,
    pochhammer,
)

CellWeight = Callable[[CellStats, Partition], object]


# ----- partition-indexed series -------------------------------------------------


def partition_product_sum(
    n: int, weight: CellWeight, cell_filter: Callable[[CellStats], bool] | None = None
) -> RatFunc:
    """sum over lambda |- n of the product of weight(u) over (filtered) cells."""
    total = RF_ZERO
    for lam in partition_list(n):
        prod = RF_ONE
        for cs in cell_stats(lam):
            if cell_filter is not None and not cell_filter(cs):
                continue
            try:
                prod = prod * RatFunc.coerce(weight(cs, lam))
            except ZeroDivisionError as exc:
                raise WeightEvaluationError(
                    f"weight undefined: {exc}", partition=lam, cell=(cs.i, cs.j)
                ) from exc
        total = total + prod
    return total


def partition_product_series(
    order: int,
    weight: CellWeight,
    cell_filter: Callable[[CellStats], bool] | None = None,
) -> TruncatedSeries:
    """sum_n x^n sum_{lambda |- n} prod_u weight(u); empty products give 1."""
    return TruncatedSeries(
        "x",
        order,
        [partition_product_sum(n, weight, cell_filter) for n in range(order + 1)],
    )


def partition_additive_series(
    order: int, summand: Callable, mode: str = "cells"
) -> TruncatedSeries:
    """sum_n x^n sum_{lambda |- n} sum summand, over cells or over parts.

    mode="cells" calls summand(cell_stats_entry, lam); mode="parts" calls
    summand(part_value, lam).  Summands may return integers, rationals,
    polynomials or rational functions.
    """
    if mode not in ("cells", "parts"):
        raise ValueError(f"unknown additive mode {mode!r}")
    coeffs = []
    for n in range(order + 1):
        total = RF_ZERO
        for lam in partition_list(n):
            if mode == "cells":
                for cs in cell_stats(lam):
                    total = total + RatFunc.coerce(summand(cs, lam))
            else:
                for part in lam.parts:
                    total = total + RatFunc.coerce(summand(part, lam))
        coeffs.append(total)
    return TruncatedSeries("x", order, coeffs)


def partition_gf(order: int) -> TruncatedSeries:
    """prod_m 1/(1 - x^m), the plain partition generating series."""
    return eta_product([(1, 0, 1)], order)


# ----- hook-square polynomials (real-rootedness targets) ------------------------


def hook_square_polynomial(n: int) -> MultiPoly:
    """sum over lambda |- n of prod_u (h_u^2 + t)/h_u^2 as a polynomial in t."""
    total = MultiPoly.const(0)
    t = MultiPoly.var("t")
    for lam in partition_list(n):
        num = ONE
        den = 1
        for h in lam.hook_lengths():
            num = num * (t + h * h)
            den *= h * h
        total = total + num * Fraction(1, den)
    return total


def arm_zero_sum(n: int) -> RatFunc:
    """sum over lambda of prod over arm-free cells of (h_u + t)/h_u."""
    t = MultiPoly.var("t")
    return partition_product_sum(
        n,
        lambda cs, lam: RatFunc(t + cs.hook) * Fraction(1, cs.hook),
        cell_filter=lambda cs: cs.arm == 0,
    )


def leg_zero_sum(n: int) -> RatFunc:
    t = MultiPoly.var("t")
    return partition_product_sum(
        n,
        lambda cs, lam: RatFunc(t + cs.hook) * Fraction(1, cs.hook),
        cell_filter=lambda cs: cs.leg == 0,
    )


def multiplicity_binomial_sum(n: int) -> MultiPoly:
    """sum over lambda of prod_j binom(k_j + t, k_j), k_j = multiplicity of j."""
    t = MultiPoly.var("t")
    total = MultiPoly.const(0)
    for lam in partition_list(n):
        prod = ONE
        for k in lam.multiplicities().values():
            prod = prod * binomial_poly(t + k, k)
        total = total + prod
    return total


def max_unit_hooks(n: int) -> int:
    """b_n: the largest number of hook-length-1 cells over partitions of n."""
    if n == 0:
        return 0
    return max(
        sum(1 for h in lam.hook_lengths() if h == 1) for lam in partition_list(n)
    )


def unit_hook_series(order: int, corrected: bool = False) -> TruncatedSeries:
    """Product side of the max-unit-hook identity.

    The eta block prod (1-x^(2j))^2 / prod (1-x^j) is the triangular-number
    series 1 + x + x^3 + x^6 + ...  The direct form multiplies it by
    x/(1-x); with corrected=True the constant term is removed before the
    geometric accumulation instead.  The two differ from order 2 on, and
    only the corrected form matches max_unit_hooks (the direct form counts
    the empty staircase too).
    """
    eta = eta_product([(2, 0, -2), (1, 0, 1)], order)
    if corrected:
        return (eta - 1) * geometric("x", order)
    x = TruncatedSeries.monomial("x", order, 1)
    return eta * geometric("x", order) * x


# ----- squares statistics --------------------------------------------------------


def squares_polynomial(n: int) -> MultiPoly:
    """F_n(q) = sum over lambda |- n of q^(squares count)."""
    total = MultiPoly.const(0)
    for lam in partition_list(n):
        total = total + MultiPoly.monomial({"q": lam.squares_count()})
    return total


def squares_total(n: int) -> int:
    """f(n) = total square count over all partitions of n (geometric route)."""
    return sum(lam.squares_count_geometric() for lam in partition_list(n))


def equivalence_classes_D(n: int) -> dict[int, list[Partition]]:
    """Group partitions of n by the dot product <1,2,...> . (diagonal hooks)."""
    classes: dict[int, list[Partition]] = {}
    for lam in partition_list(n):
        j = lam.squares_count_by_diagonal()
        classes.setdefault(j, []).append(lam)
    return classes


# ----- q-series with square / first-hook statistics ------------------------------


def top_hook_series(order: int, gap2_only: bool = False) -> TruncatedSeries:
    """sum_n x^n sum q^(h(1,1)) over partitions of n, optionally restricted to
    partitions with parts differing by >= 2.

    The empty partition contributes 1 (exponent 0) in the unrestricted sum and
    is excluded from the restricted one, matching the k=0 / k>=1 base terms of
    the q-series these sums are compared against.
    """
    coeffs: list[RatFunc] = [RF_ZERO if gap2_only else RF_ONE]
    for n in range(1, order + 1):
        total = MultiPoly.const(0)
        for lam in partition_list(n):
            ps = lam.parts
            if gap2_only and any(ps[i] - ps[i + 1] < 2 for i in range(len(ps) - 1)):
                continue
            total = total + MultiPoly.monomial({"q": ps[0] + len(ps) - 1})
        coeffs.append(RatFunc.coerce(total))
    return TruncatedSeries("x", order, coeffs)


def _qpoch_xq_series(k: int, order: int) -> TruncatedSeries:
    # (qx; x)_k = prod_{j=1..k} (1 - q x^j)
    q = MultiPoly.var("q")
    a = TruncatedSeries.monomial("x", order, 1, q)
    step = TruncatedSeries.monomial("x", order, 1)
    return pochhammer(a, step, k, order)


def rr_q_series(kind: str, order: int, q_order: int | None = None) -> TruncatedSeries:
    """Sparse q-series sides of the square/first-hook identities.

    kind="prop91":      sum_{k>=1} x^(k^2) q^(3k-2) / (qx;x)_k
    kind="prop92_middle": sum_{k>=0} x^(k(k+1)) q^(2k) / ((qx;x)_k (qx;x)_{k+1})
    kind="prop92_right": sum_n x^n sum_{j,i} q^j [q^(n-j)] binom(j-1, i)_q,
                         with the empty-partition convention that the n=0
                         coefficient is 1 (the printed double sum gives 0).
    kind="thm95":       sum_{k>=0} x^(k^2) q^(k(k+1)(2k+1)/6)
                                     / prod_{j=1..k} (1 - x^j q^(j(j+1)/2))^2

    q_order, when given, drops q-powers above it from every coefficient;
    None keeps the coefficients exact (their q-degree is already bounded by
    the x-order for all four kinds).
    """
    result = _rr_q_series_full(kind, order)
    if q_order is None:
        return result
    trimmed = []
    for c in result.coeffs:
        poly = c.as_poly()
        kept = {
            exp: v
            for exp, v in poly.terms.items()
            if exp[VAR_INDEX["q"]] <= q_order
        }
        trimmed.append(RatFunc.coerce(MultiPoly(kept)))
    return TruncatedSeries("x", order, trimmed)


def _rr_q_series_full(kind: str, order: int) -> TruncatedSeries:
    q = MultiPoly.var("q")
    if kind == "prop91":
        total = TruncatedSeries.zero("x", order)
        k = 1
        while k * k <= order:
            num = TruncatedSeries.monomial("x", order, k * k, q ** (3 * k - 2))
            total = total + num / _qpoch_xq_series(k, order)
            k += 1
        return total
    if kind == "prop92_middle":
        total = TruncatedSeries.zero("x", order)
        k = 0
        while k * (k + 1) <= order:
            num = TruncatedSeries.monomial("x", order, k * (k + 1), q ** (2 * k))
            den = _qpoch_xq_series(k, order) * _qpoch_xq_series(k + 1, order)
            total = total + num / den
            k += 1
        return total
    if kind == "prop92_right":
        coeffs: list[RatFunc] = [RF_ONE]
        for n in range(1, order + 1):
            acc = MultiPoly.const(0)
            for j in range(1, n + 1):
                row = MultiPoly.const(0)
                for i in range(j):
                    row = row + gaussian_binomial(j - 1, i)
                c = row.coeff_of("q", n - j)
                if not c.is_zero():
                    acc = acc + MultiPoly.monomial({"q": j}, c.as_fraction())
            coeffs.append(RatFunc.coerce(acc))
        return TruncatedSeries("x", order, coeffs)
    if kind == "thm95":
        total = TruncatedSeries.zero("x", order)
        k = 0
        while k * k <= order:
            term = TruncatedSeries.monomial(
                "x", order, k * k, q ** (k * (k + 1) * (2 * k + 1) // 6)
            )
            for j in range(1, k + 1):
                block = TruncatedSeries.const(1, "x", order) - TruncatedSeries.monomial(
                    "x", order, j, q ** (j * (j + 1) // 2)
                )
                term = term / (block * block)
            total = total + term
            k += 1
        return total
    raise ValueError(f"unknown q-series kind {kind!r}")


def rr_count_series(order: int) -> TruncatedSeries:
    """1 + sum_{k>=1} x^(k^2)/(x;x)_k; counts partitions with gaps >= 2."""
    total = TruncatedSeries.const(1, "x", order)
    k = 1
    while k * k <= order:
        num = TruncatedSeries.monomial("x", order, k * k)
        a = TruncatedSeries.monomial("x", order, 1)
        total = total + num / pochhammer(a, a, k, order)
        k += 1
    return total


def rr_product_series(order: int) -> TruncatedSeries:
    """prod_j 1/((1-x^(5j-1))(1-x^(5j-4))); the mod-5 side of the count."""
    return eta_product([(5, 1, 1), (5, 4, 1)], order)


# ----- additive hook/part sums (quantum variants) --------------------------------


def power_sum_rhs_series(order: int, alpha: int) -> TruncatedSeries:
    """prod 1/(1-x^m) * sum_k k^(alpha+1) x^k/(1-x^k)."""
    tail = TruncatedSeries.zero("x", order)
    for k in range(1, order + 1):
        mono = TruncatedSeries.monomial("x", order, k, k ** (alpha + 1))
        tail = tail + mono * geometric("x", order, deg=k)
    return partition_gf(order) * tail


def marked_power_rhs_series(order: int, alpha: int, weighted: bool) -> TruncatedSeries:
    """prod 1/(1-x^m) * sum_k (k if weighted else 1) x^k q^(k^alpha)/(1-x^k).

    The weighted form pairs with the hook sum, the unweighted with the part
    sum; differentiating in q at q=1 recovers the plain power sums.
    """
    qv = MultiPoly.var("q")
    tail = TruncatedSeries.zero("x", order)
    for k in range(1, order + 1):
        c = qv ** (k**alpha) * (k if weighted else 1)
        tail = tail + TruncatedSeries.monomial("x", order, k, c) * geometric(
            "x", order, deg=k
        )
    return partition_gf(order) * tail


def part_marker_rhs_series(order: int) -> TruncatedSeries:
    """prod 1/(1-x^m) * sum_k q x^k/(1 - q x^k); marks one part value per term."""
    qv = MultiPoly.var("q")
    tail = TruncatedSeries.zero("x", order)
    for k in range(1, order + 1):
        tail = tail + TruncatedSeries.monomial("x", order, k, qv) * geometric(
            "x", order, deg=k, coeff=qv
        )
    return partition_gf(order) * tail


def part_count_rhs_series(order: int) -> TruncatedSeries:
    """prod 1/(1-x^m) * sum_k x^k/(1-x^k)^2; total part size marker."""
    tail = TruncatedSeries.zero("x", order)
    for k in range(1, order + 1):
        geo = geometric("x", order, deg=k)
        tail = tail + TruncatedSeries.monomial("x", order, k) * geo * geo
    return partition_gf(order) * tail


# ----- surd-quotient hook factor (involution series) ------------------------------


def surd_hook_factor(h: int) -> RatFunc:
    """[(1+a)^h + (1-a)^h] / [(1+a)^h - (1-a)^h] * a/h as a rational function."""
    a = MultiPoly.var("a")
    plus = (ONE + a) ** h
    minus = (ONE - a) ** h
    return RatFunc(plus + minus) / RatFunc(plus - minus) * a * Fraction(1, h)


def involution_moment_poly(n: int) -> MultiPoly:
    """sum_j a^(2j) / (2^j j! (n-2j)!); the 2-cycle census of involutions."""
    total = MultiPoly.const(0)
    for j in range(n // 2 + 1):
        c = Fraction(1, 2**j * math.factorial(j) * math.factorial(n - 2 * j))
        total = total + MultiPoly.monomial({"a": 2 * j}, c)
    return total


# ----- finite identities ----------------------------------------------------------


def hook_falling_factorial_moment(n: int, r: int) -> tuple[Fraction, Fraction]:
    """Plancherel-averaged falling-square hook sum and its closed form."""
    if n < 1 or r < 1:
        raise ValueError("identity needs n, r >= 1")
    lhs = Fraction(0)
    for lam in partition_list(n):
        f = lam.dim_sytx()
        cell_total = 0
        for h in lam.hook_lengths():
            prod = 1
            for j in range(r):
                prod *= h * h - j * j
            cell_total += prod
        lhs += Fraction(f * f * cell_total)
    lhs /= math.factorial(n)

    def comb(a: int, b: int) -> int:
        if b < 0 or a < 0 or b > a:
            return 0
        return math.comb(a, b)

    rhs = Fraction(
        comb(2 * r + 1, r + 1) ** 2 * comb(n, r + 1) * math.factorial(r), 2 * r + 1
    ) + Fraction(
        comb(2 * r + 2, r + 1)
        * comb(2 * r - 2, r - 1)
        * comb(n, r)
        * math.factorial(r + 1),
        8 * r + 4,
    )
    return lhs, rhs


# ----- cycle-index determinant ----------------------------------------------------


Matrix = Sequence[Sequence[Fraction]]


def _validate_square(m: Matrix) -> int:
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise NotSquare(f"matrix is not square: {m!r}")
    return n


def _mat_mul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    n = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def det_cofactor(m: Matrix) -> Fraction:
    """Cofactor expansion along the first row; the oracle for small matrices."""
    n = _validate_square(m)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [
            [row[c] for c in range(n) if c != j] for row in list(m)[1:]
        ]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(m[0][j]) * det_cofactor(minor)
    return total


def cycle_index_determinant(m: Matrix, sign_convention: str = "newton") -> Fraction:
    """(1/n!) sum over S_n of sign * t_1^c_1 ... t_n^c_n with t_i = tr(M^i).

    sign_convention="newton" uses (-1)^(n - cycles), which reproduces det(M);
    "alternating" uses (-1)^(cycles - 1).  Both are computed over cycle types
    with class sizes, never permutation by permutation.
    """
    if sign_convention not in ("newton", "alternating"):
        raise ValueError(f"unknown sign convention {sign_convention!r}")
    n = _validate_square(m)
    traces = []
    power = m
    for _ in range(n):
        traces.append(sum((power[i][i] for i in range(n)), Fraction(0)))
        power = _mat_mul(power, m)
    total = Fraction(0)
    for ct in cycle_types(n):
        prod = Fraction(1)
        for j in ct.lengths:
            prod *= traces[j - 1]
        if sign_convention == "newton":
            sign = -1 if (n - ct.kappa) % 2 else 1
        else:
            sign = -1 if (ct.kappa - 1) % 2 else 1
        total += sign * ct.class_size * prod
    return total / math.factorial(n)
