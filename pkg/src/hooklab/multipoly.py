"""Exact sparse multivariate polynomials and reduced rational functions.

Every coefficient in this package is a `fractions.Fraction`; nothing is ever
rounded.  A polynomial is a map from exponent vectors to nonzero rational
coefficients (the zero polynomial is the empty map).  The variable set is
fixed once for the whole package (VARIABLES), so exponent vectors built in
different modules always line up and cross-module arithmetic needs no
variable bookkeeping.

RatFunc is a quotient of two MultiPoly values kept in reduced form: the gcd
of numerator and denominator is divided out and both are rescaled so the
denominator's lexicographically leading coefficient is 1.  Equal values then
have literally equal term maps, so ``==`` is a data comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

#: Coefficient variables, in the fixed order used by every exponent vector.
#: t, q, v, a, b, z are the scalar parameters appearing in identities; the
#: y-block is reserved for symmetric polynomials in up to six variables.
VARIABLES = ("t", "q", "v", "a", "b", "z", "y1", "y2", "y3", "y4", "y5", "y6")
NVARS = len(VARIABLES)
VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

ZERO_EXP = (0,) * NVARS

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _fraction_content(values: Iterable[Fraction]) -> Fraction:
    """Positive rational c such that value/c is an integer for every value,
    with the integers collectively coprime."""
    num_gcd = 0
    den_lcm = 1
    for f in values:
        num_gcd = math.gcd(num_gcd, abs(f.numerator))
        den_lcm = den_lcm * f.denominator // math.gcd(den_lcm, f.denominator)
    if num_gcd == 0:
        return Fraction(1)
    return Fraction(num_gcd, den_lcm)


class MultiPoly:
    """Sparse polynomial over Fraction in the fixed variable set."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        # Constraint: stored terms never map to zero.
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                c = _as_fraction(coeff)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean
        self._hash = None

    # ----- constructors -------------------------------------------------

    @staticmethod
    def const(value) -> MultiPoly:
        c = _as_fraction(value)
        if not c:
            return ZERO
        return MultiPoly({ZERO_EXP: c})

    @staticmethod
    def var(name: str, power: int = 1) -> MultiPoly:
        if name not in VAR_INDEX:
            raise KeyError(f"unknown variable {name!r}; pick from {VARIABLES}")
        if power < 0:
            raise ValueError("monomials need nonnegative exponents")
        if power == 0:
            return ONE
        exp = [0] * NVARS
        exp[VAR_INDEX[name]] = power
        return MultiPoly({tuple(exp): Fraction(1)})

    @staticmethod
    def monomial(powers: Mapping[str, int], coeff=1) -> MultiPoly:
        exp = [0] * NVARS
        for name, p in powers.items():
            exp[VAR_INDEX[name]] = p
        return MultiPoly({tuple(exp): _as_fraction(coeff)})

    # ----- predicates and scalar views ----------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {ZERO_EXP: Fraction(1)}

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ZERO_EXP in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(ZERO_EXP, Fraction(0))

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self.render()}")
        return self.constant_term()

    def used_vars(self) -> tuple[int, ...]:
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        return tuple(sorted(used))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = VAR_INDEX[name]
        return max(exp[i] for exp in self.terms)

    # ----- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        if not self.terms:
            return p
        if not p.terms:
            return self
        out = dict(self.terms)
        for exp, c in p.terms.items():
            s = out.get(exp)
            if s is None:
                out[exp] = c
            else:
                s = s + c
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        r._hash = None
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {exp: -c for exp, c in self.terms.items()}
        r._hash = None
        return r

    def __sub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __mul__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        if not self.terms or not p.terms:
            return ZERO
        # Scalar fast path keeps q-series loops cheap.
        if p.is_constant():
            c = p.constant_term()
            r = MultiPoly.__new__(MultiPoly)
            r.terms = {exp: v * c for exp, v in self.terms.items()}
            r._hash = None
            return r
        if self.is_constant():
            return p * self.constant_term()
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in p.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp)
                if s is None:
                    out[exp] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[exp] = s
                    else:
                        del out[exp]
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        r._hash = None
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by an exact scalar only; use RatFunc for polynomial quotients."""
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (1 / c)
        return NotImplemented

    def __eq__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self.terms == p.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.render()})"

    # ----- structure ------------------------------------------------------

    def coeff_of(self, name: str, power: int) -> MultiPoly:
        """Coefficient of name**power, as a polynomial in the other variables."""
        i = VAR_INDEX[name]
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == power:
                reduced = list(exp)
                reduced[i] = 0
                out[tuple(reduced)] = c
        return MultiPoly(out)

    def as_univariate(self, name: str) -> dict[int, MultiPoly]:
        """View as a univariate polynomial in `name` with MultiPoly coefficients."""
        i = VAR_INDEX[name]
        buckets: dict[int, dict] = {}
        for exp, c in self.terms.items():
            d = exp[i]
            reduced = list(exp)
            reduced[i] = 0
            buckets.setdefault(d, {})[tuple(reduced)] = c
        return {d: MultiPoly(t) for d, t in buckets.items()}

    def dense_coeffs(self, name: str) -> list[Fraction]:
        """Dense coefficient list (degree 0 upward) of a univariate polynomial.

        Raises NotUnivariate if any other variable appears.
        """
        from .errors import NotUnivariate

        i = VAR_INDEX[name]
        deg = 0
        for exp in self.terms:
            for j, e in enumerate(exp):
                if e and j != i:
                    raise NotUnivariate(
                        f"expected a polynomial in {name} only, found {VARIABLES[j]}"
                    )
            deg = max(deg, exp[i])
        out = [Fraction(0)] * (deg + 1)
        for exp, c in self.terms.items():
            out[exp[i]] = c
        return out

    def subs(self, name: str, value) -> MultiPoly:
        """Substitute a variable by an exact rational or another polynomial."""
        i = VAR_INDEX[name]
        if isinstance(value, (int, Fraction)):
            value = MultiPoly.const(value)
        powers: dict[int, MultiPoly] = {0: ONE}
        result = ZERO
        for exp, c in sorted(self.terms.items()):
            d = exp[i]
            if d not in powers:
                p = powers[max(powers)]
                for k in range(max(powers) + 1, d + 1):
                    p = p * value
                    powers[k] = p
            reduced = list(exp)
            reduced[i] = 0
            result = result + MultiPoly({tuple(reduced): c}) * powers[d]
        return result

    def derivative(self, name: str) -> MultiPoly:
        i = VAR_INDEX[name]
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                reduced = list(exp)
                reduced[i] -= 1
                out[tuple(reduced)] = c * exp[i]
        return MultiPoly(out)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Full numeric evaluation; every used variable must be assigned."""
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for i, e in enumerate(exp):
                if e:
                    term *= _as_fraction(assignment[VARIABLES[i]]) ** e
            total += term
        return total

    # ----- leading terms, content, division -------------------------------

    def lex_leading(self) -> tuple[tuple, Fraction]:
        """(exponent, coefficient) of the lexicographically largest monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def content(self) -> Fraction:
        return _fraction_content(self.terms.values())

    def primitive(self) -> MultiPoly:
        """Divide out the rational content; leading (lex) coefficient made positive."""
        if not self.terms:
            return self
        c = self.content()
        if self.terms[max(self.terms)] < 0:
            c = -c
        return self * (1 / c)

    def render(self) -> str:
        """Human-readable form with terms in graded-lex order, e.g. '1 + 4*t + t^2'."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e))
        parts = []
        for exp in keys:
            coeff = self.terms[exp]
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(VARIABLES[i])
                elif e > 1:
                    factors.append(f"{VARIABLES[i]}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)


ZERO = MultiPoly()
ONE = MultiPoly({ZERO_EXP: Fraction(1)})


def exact_div(p: MultiPoly, d: MultiPoly) -> MultiPoly | None:
    """Quotient p/d when the division is exact, else None.

    Repeated elimination of the lex-leading term; terminates because the
    leading exponent strictly decreases in lex order.
    """
    if d.is_zero():
        raise ZeroDivisionError("exact_div by zero polynomial")
    if p.is_zero():
        return ZERO
    if d.is_one():
        return p
    if d.is_constant():
        return p * (1 / d.constant_term())
    d_exp, d_coeff = d.lex_leading()
    quotient: dict[tuple, Fraction] = {}
    rem = p
    while rem.terms:
        r_exp, r_coeff = rem.lex_leading()
        diff = tuple(a - b for a, b in zip(r_exp, d_exp))
        if any(e < 0 for e in diff):
            return None
        c = r_coeff / d_coeff
        quotient[diff] = quotient.get(diff, Fraction(0)) + c
        rem = rem - MultiPoly({diff: c}) * d
    return MultiPoly(quotient)


# ----- gcd ----------------------------------------------------------------
#
# Primitive polynomial remainder sequences, recursing on the first used
# variable.  Inputs here stay small (mostly univariate in q or a, sometimes
# bivariate in q and t), so transparent PRS beats anything clever.


def _gcd_univariate(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    a = p.dense_coeffs(name)
    b = q.dense_coeffs(name)

    def strip(v):
        while v and not v[-1]:
            v.pop()
        return v

    a, b = strip(a), strip(b)
    while b:
        if len(b) == 1:
            a = [Fraction(1)]
            break
        # monic remainder step
        inv = 1 / b[-1]
        b = [c * inv for c in b]
        while len(a) >= len(b):
            lead = a[-1]
            off = len(a) - len(b)
            a = [c - lead * b[i - off] if i >= off else c for i, c in enumerate(a)]
            a = strip(a)
            if not a:
                break
        a, b = b, a
    i = VAR_INDEX[name]
    out = {}
    for d, c in enumerate(a):
        if c:
            exp = [0] * NVARS
            exp[i] = d
            out[tuple(exp)] = c
    return MultiPoly(out).primitive()


def _univar_content(p: MultiPoly, name: str) -> MultiPoly:
    """gcd of the coefficients of p viewed as univariate in `name`."""
    g = ZERO
    for coeff in p.as_univariate(name).values():
        g = poly_gcd(g, coeff)
        if g.is_one():
            return g
    return g


def _pseudo_rem(f: MultiPoly, g: MultiPoly, name: str) -> MultiPoly:
    dg = g.degree(name)
    lc_g = g.coeff_of(name, dg)
    r = f
    v = MultiPoly.var(name)
    while not r.is_zero():
        dr = r.degree(name)
        if dr < dg:
            break
        lc_r = r.coeff_of(name, dr)
        r = r * lc_g - g * lc_r * v ** (dr - dg)
    return r


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Primitive gcd with positive lex-leading coefficient (1 for coprime inputs)."""
    if p.is_zero():
        return q.primitive() if not q.is_zero() else ZERO
    if q.is_zero():
        return p.primitive()
    used = sorted(set(p.used_vars()) | set(q.used_vars()))
    if not used:
        return ONE
    name = VARIABLES[used[0]]
    only = len(used) == 1
    if only:
        return _gcd_univariate(p, q, name)
    # content/primitive split with respect to the main variable
    cont_p = _univar_content(p, name)
    cont_q = _univar_content(q, name)
    cont = poly_gcd(cont_p, cont_q)
    f = exact_div(p, cont_p)
    g = exact_div(q, cont_q)
    if f.degree(name) < g.degree(name):
        f, g = g, f
    while True:
        if g.is_zero():
            result = f
            break
        if g.degree(name) == 0:
            result = ONE
            break
        r = _pseudo_rem(f, g, name)
        if r.is_zero():
            result = g
            break
        r_cont = _univar_content(r, name)
        f, g = g, exact_div(r, r_cont)
    result = exact_div(result, _univar_content(result, name)) if result.degree(name) > 0 else ONE
    return (cont * result).primitive()


# ----- rational functions ---------------------------------------------------


class RatFunc:
    """Reduced quotient of MultiPoly values.

    Canonical form: gcd(num, den) divided out, then both scaled so the
    denominator's lex-leading coefficient is 1.  Polynomials embed with
    denominator ONE, and arithmetic takes fast paths in that common case so
    polynomial-only pipelines never pay for gcds.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.const(num)
        if den is None:
            den = ONE
        elif not isinstance(den, MultiPoly):
            den = MultiPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if den.is_one():
            self.num, self.den = num, den
            return
        if not _reduced:
            if den.is_constant():
                num = num * (1 / den.constant_term())
                den = ONE
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = exact_div(num, g)
                    den = exact_div(den, g)
        if not den.is_one():
            _, lead = den.lex_leading()
            if lead != 1:
                inv = 1 / lead
                num = num * inv
                den = den * inv
        self.num, self.den = num, den

    # -- helpers

    @staticmethod
    def coerce(value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, MultiPoly):
            return RatFunc(value)
        if isinstance(value, (int, Fraction)):
            return RatFunc(MultiPoly.const(value))
        raise TypeError(f"cannot interpret {type(value).__name__} as a rational function")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> MultiPoly:
        from .errors import NonPolynomialResult

        if not self.den.is_one():
            raise NonPolynomialResult(
                f"denominator {self.den.render()} did not clear"
            )
        return self.num

    def as_fraction(self) -> Fraction:
        return self.as_poly().as_fraction()

    # -- arithmetic

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            r = RatFunc.__new__(RatFunc)
            r.num, r.den = self.num + o.num, ONE
            return r
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RF_ZERO
        if self.den.is_one() and o.den.is_one():
            r = RatFunc.__new__(RatFunc)
            r.num, r.den = self.num * o.num, ONE
            return r
        # cross-reduce before multiplying to keep operands small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_one() else exact_div(self.num, g1)
        d2 = o.den if g1.is_one() else exact_div(o.den, g1)
        n2 = o.num if g2.is_one() else exact_div(o.num, g2)
        d1 = self.den if g2.is_one() else exact_div(self.den, g2)
        return RatFunc(n1 * n2, d1 * d2, _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        inv = RatFunc.__new__(RatFunc)
        inv.num, inv.den = o.den, o.num
        return self * inv

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            base = RatFunc(self.den, self.num)
            n = -n
        else:
            base = self
        return RatFunc(base.num ** n, base.den ** n, _reduced=True)

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def subs(self, name: str, value) -> RatFunc:
        return RatFunc(self.num.subs(name, value), self.den.subs(name, value))

    def render(self) -> str:
        if self.den.is_one():
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RatFunc({self.render()})"


RF_ZERO = RatFunc(ZERO)
RF_ONE = RatFunc(ONE)
