"""Exact real-root counting for univariate rational polynomials.

Sturm chains over Fraction coefficients: the chain is built on the squarefree
part (polynomial divided by gcd with its derivative), so the root count is a
count of distinct real roots and simplicity is read off the gcd degree.
Integer content is stripped at every remainder step to keep coefficients
small.  No numerics are involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .multipoly import MultiPoly

Dense = list  # dense coefficient list, degree 0 upward, no trailing zeros


def _strip(p: Dense) -> Dense:
    while p and not p[-1]:
        p.pop()
    return p


def _to_int_primitive(p: Dense) -> Dense:
    """Scale by a positive rational so coefficients are coprime integers."""
    if not p:
        return p
    den_lcm = 1
    for c in p:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [c.numerator * (den_lcm // c.denominator) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return [Fraction(v, g) for v in ints]


def _deriv(p: Dense) -> Dense:
    return [c * i for i, c in enumerate(p)][1:]


def _rem(a: Dense, b: Dense) -> Dense:
    a = list(a)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        lead = a[-1] * inv
        off = len(a) - len(b)
        for i in range(len(b)):
            a[off + i] -= lead * b[i]
        _strip(a)
        if not a:
            break
    return a


def _gcd(a: Dense, b: Dense) -> Dense:
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b)
    return _to_int_primitive(a)


def _exact_quotient(a: Dense, b: Dense) -> Dense:
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    a = list(a)
    while len(a) >= len(b):
        lead = a[-1] / b[-1]
        off = len(a) - len(b)
        q[off] = lead
        for i in range(len(b)):
            a[off + i] -= lead * b[i]
        _strip(a)
        if not a:
            break
    return _strip(q)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    """Sign changes ignoring zeros."""
    cleaned = [s for s in signs if s]
    return sum(1 for u, w in zip(cleaned, cleaned[1:]) if u * w < 0)


def _sturm_chain(p: Dense) -> list[Dense]:
    chain = [p, _deriv(p)]
    while chain[-1]:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in _to_int_primitive(r)])
    return chain


def _var_at_minus_inf(chain) -> int:
    return _variations([_sign(p[-1]) * (-1) ** (len(p) - 1) for p in chain if p])


def _var_at_plus_inf(chain) -> int:
    return _variations([_sign(p[-1]) for p in chain if p])


def _var_at_zero(chain) -> int:
    return _variations([_sign(p[0]) for p in chain if p])


@dataclass(frozen=True)
class SturmReport:
    real_root_count: int
    all_roots_simple: bool
    all_roots_negative: bool


def sturm_analysis(p: MultiPoly, name: str = "t") -> SturmReport:
    """Distinct-real-root count, simplicity, and negativity for a univariate
    polynomial.

    all_roots_negative refers to the real roots only, so it is vacuously true
    when there are none (e.g. t^2 + 1).
    """
    dense = _strip(list(p.dense_coeffs(name)))
    if not dense:
        raise ValueError("sturm analysis of the zero polynomial")
    if len(dense) == 1:
        return SturmReport(0, True, True)
    d = _deriv(dense)
    g = _gcd(dense, d)
    simple = len(g) == 1
    squarefree = dense if simple else _exact_quotient(dense, g)
    chain = _sturm_chain(squarefree)
    total = _var_at_minus_inf(chain) - _var_at_plus_inf(chain)
    # roots strictly left of zero: drop a root at the origin first
    at_zero = squarefree
    if at_zero[0] == 0:
        at_zero = at_zero[1:]
    neg_chain = _sturm_chain(at_zero) if len(at_zero) > 1 else [at_zero]
    if len(at_zero) <= 1:
        negatives = 0
    else:
        negatives = _var_at_minus_inf(neg_chain) - _var_at_zero(neg_chain)
    return SturmReport(total, simple, negatives == total)


def unimodal(p: MultiPoly, name: str = "t") -> bool:
    """True when the dense coefficient list weakly rises then weakly falls."""
    coeffs = p.dense_coeffs(name)
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < len(coeffs) and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i == len(coeffs) - 1
