"""Sparse multivariate polynomials over Q with exact arithmetic.

Polynomials live in Q[x0..x_{n-1}] for n between 1 and 4.  Terms are held in
a map from exponent tuples to nonzero Fraction coefficients; the canonical
term order used for printing and leading-term questions is graded
lexicographic, descending, with x0 > x1 > x2 > x3.

Everything here is exact: no floats, no approximations.  Values are treated
as immutable after construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]


class PolynomialError(ValueError):
    """Raised on malformed polynomial inputs (bad degrees, zero divisors...)."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def grlex_key(exponents: tuple) -> tuple:
    """Sort key for graded-lex order; larger key = earlier (leading) term."""
    return (sum(exponents), exponents)


class MultiPoly:
    """A sparse polynomial with Fraction coefficients in up to 4 variables."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms=None):
        if not 1 <= num_vars <= 4:
            raise PolynomialError(f"num_vars must be in 1..4, got {num_vars}")
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != num_vars or any(e < 0 for e in expo):
                    raise PolynomialError(f"bad exponent vector {expo} for {num_vars} variables")
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    clean[expo] = coeff
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, c) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: _as_fraction(c)})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise PolynomialError(f"variable index {index} out of range for {num_vars} variables")
        expo = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls(num_vars, {expo: Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, exponents: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(num_vars, {tuple(exponents): _as_fraction(coeff)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero included)."""
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        return max((e[var] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self) -> dict:
        """Decomposition into {degree: homogeneous part}."""
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly(self.num_vars, t) for d, t in parts.items()}

    def sorted_terms(self) -> list:
        """Terms in canonical (graded-lex descending) order."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        lead = max(self.terms, key=grlex_key)
        return self.terms[lead]

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise PolynomialError("mixed variable counts")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.num_vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _as_fraction(other)
            if c0 == 0:
                return MultiPoly.zero(self.num_vars)
            return MultiPoly(self.num_vars, {e: c * c0 for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # iterate over the shorter operand for fewer dict passes
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.num_vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- calculus and substitution -------------------------------------------

    def derivative(self, var: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable `var`."""
        if not 0 <= var < self.num_vars:
            raise PolynomialError(f"variable index {var} out of range")
        terms = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            e2 = list(e)
            e2[var] -= 1
            terms[tuple(e2)] = c * e[var]
        return MultiPoly(self.num_vars, terms)

    def evaluate(self, values: Sequence):
        """Evaluate at a point; values may be Fractions or any field elements
        supporting +, * with Fraction coefficients."""
        if len(values) != self.num_vars:
            raise PolynomialError("wrong number of values")
        powers: dict = {}

        def power(i, e):
            if e == 0:
                return None
            key = (i, e)
            if key not in powers:
                if e == 1:
                    powers[key] = values[i]
                else:
                    powers[key] = power(i, e - 1) * values[i]
            return powers[key]

        total = None
        for e, c in self.terms.items():
            term = None
            for i, ei in enumerate(e):
                p = power(i, ei)
                if p is not None:
                    term = p if term is None else term * p
            term = c if term is None else term * c
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def substitute(self, replacements: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute replacements[i] for variable i; all replacements share a
        variable count, which becomes the result's."""
        if len(replacements) != self.num_vars:
            raise PolynomialError("wrong number of replacements")
        nv = replacements[0].num_vars
        if any(r.num_vars != nv for r in replacements):
            raise PolynomialError("replacement polynomials must share a variable count")
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = replacements[i] ** e if e > 1 else replacements[i]
            return powers[key]

        total = MultiPoly.zero(nv)
        for e, c in self.terms.items():
            term = MultiPoly.constant(nv, c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * power(i, ei)
            total = total + term
        return total

    # -- content and exact division -------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MultiPoly":
        """self / content, sign-normalized so the leading coefficient is positive."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self * (1 / c)

    def divexact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact division; raises PolynomialError if the division is not exact."""
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise PolynomialError("division by zero polynomial")
        if divisor.is_constant():
            return self * (1 / divisor.constant_value())
        lead_d = max(divisor.terms, key=grlex_key)
        cd = divisor.terms[lead_d]
        rem = dict(self.terms)
        out: dict = {}
        while rem:
            lead_r = max(rem, key=grlex_key)
            q = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(x < 0 for x in q):
                raise PolynomialError("inexact polynomial division")
            cq = rem[lead_r] / cd
            out[q] = out.get(q, Fraction(0)) + cq
            for e, c in divisor.terms.items():
                e2 = tuple(a + b for a, b in zip(q, e))
                s = rem.get(e2, Fraction(0)) - cq * c
                if s:
                    rem[e2] = s
                else:
                    rem.pop(e2, None)
        return MultiPoly(self.num_vars, out)

    # -- univariate views ------------------------------------------------------

    def coeffs_in(self, var: int) -> list:
        """Dense coefficient list in `var` (index = power), entries MultiPoly
        in the same ambient ring with zero exponent on `var`."""
        d = self.degree_in(var)
        coeffs = [dict() for _ in range(d + 1)] if d >= 0 else []
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[var]
            e2[var] = 0
            coeffs[k][tuple(e2)] = c
        return [MultiPoly(self.num_vars, t) for t in coeffs]

    @staticmethod
    def from_coeffs_in(num_vars: int, var: int, coeffs: Sequence["MultiPoly"]) -> "MultiPoly":
        terms: dict = {}
        for k, p in enumerate(coeffs):
            for e, c in p.terms.items():
                e2 = list(e)
                e2[var] += k
                terms[tuple(e2)] = terms.get(tuple(e2), Fraction(0)) + c
        return MultiPoly(num_vars, terms)


# -- printing ------------------------------------------------------------------

DEFAULT_NAMES = ("x0", "x1", "x2", "x3")


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: MultiPoly, names: Sequence[str] = DEFAULT_NAMES) -> str:
    """Canonical rendering: graded-lex descending terms, explicit '*', '^'."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        factors = []
        for i, ei in enumerate(e):
            if ei == 1:
                factors.append(names[i])
            elif ei > 1:
                factors.append(f"{names[i]}^{ei}")
        mono = "*".join(factors)
        abs_c = abs(c)
        if not mono:
            body = _format_coeff(abs_c)
        elif abs_c == 1:
            body = mono
        else:
            body = f"{_format_coeff(abs_c)}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += sign + body
    return out


# -- derivatives, resultants, squarefree parts ----------------------------------


def derivative(p: MultiPoly, var: int) -> MultiPoly:
    """Formal partial derivative (module-level alias)."""
    return p.derivative(var)


def _lc(coeffs: list) -> MultiPoly:
    return coeffs[-1]


def _strip(coeffs: list) -> list:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _pseudo_rem(A: list, B: list) -> list:
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced by B.

    Dense little-endian lists with MultiPoly entries; assumes deg A >= deg B >= 1.
    The full power of lc(B) is applied even when a step's top coefficient is
    already zero, as the subresultant bookkeeping requires.
    """
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    zero = MultiPoly.zero(lb.num_vars)
    R = list(A)
    for k in range(dA - dB, -1, -1):
        top = R[dB + k]
        R = [c * lb for c in R]
        if not top.is_zero():
            for i, b in enumerate(B):
                R[i + k] = R[i + k] - top * b
        R[dB + k] = zero  # cancels by construction
    return _strip(R)


def _subresultant_resultant(A: list, B: list, nv: int) -> MultiPoly:
    """Resultant via the subresultant PRS over an integral domain.

    A, B are dense little-endian lists of MultiPoly coefficients.  Returns the
    determinant-convention resultant Res(A, B) (rows of A's coefficients first
    in the Sylvester matrix).
    """
    one = MultiPoly.constant(nv, 1)
    A = _strip(list(A))
    B = _strip(list(B))
    if not A or not B:
        return MultiPoly.zero(nv)
    sign = 1
    dA, dB = len(A) - 1, len(B) - 1
    if dA < dB:
        A, B = B, A
        dA, dB = dB, dA
        if (dA * dB) % 2 == 1:
            sign = -sign
    if dB == 0:
        return B[0] ** dA * sign
    g = one
    h = one
    while True:
        d = len(A) - len(B)  # deg A - deg B
        dA, dB = len(A) - 1, len(B) - 1
        if dA % 2 == 1 and dB % 2 == 1:
            sign = -sign
        R = _pseudo_rem(A, B)
        A = B
        denom = g * (h ** d)
        B = _strip([c.divexact(denom) for c in R])
        if not B:
            return MultiPoly.zero(nv)
        g = A[-1]
        if d > 0:
            h = (g ** d).divexact(h ** (d - 1)) if d > 1 else g
        if len(B) - 1 == 0:
            break
    dA = len(A) - 1
    res = (B[0] ** dA).divexact(h ** (dA - 1)) if dA > 1 else B[0] ** dA
    return res * sign


def resultant(p: MultiPoly, q: MultiPoly, var: int) -> MultiPoly:
    """Resultant of p and q with respect to `var`.

    Sign convention: the determinant of the Sylvester matrix whose first
    deg_var(q) rows carry p's coefficients.  Computed through the
    subresultant PRS, which keeps intermediate coefficient growth tame;
    sylvester_resultant below is the direct determinant for cross-checking.
    """
    if p.num_vars != q.num_vars:
        raise PolynomialError("mixed variable counts")
    if p.degree_in(var) <= 0 or q.degree_in(var) <= 0:
        raise PolynomialError("constant in elimination variable")
    return _subresultant_resultant(p.coeffs_in(var), q.coeffs_in(var), p.num_vars)


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: int) -> list:
    """Sylvester matrix (list of rows of MultiPoly), p's coefficient rows first."""
    if p.degree_in(var) <= 0 or q.degree_in(var) <= 0:
        raise PolynomialError("constant in elimination variable")
    nv = p.num_vars
    a = p.coeffs_in(var)[::-1]  # big-endian
    b = q.coeffs_in(var)[::-1]
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MultiPoly.zero(nv)
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(rows: list) -> MultiPoly:
    """Fraction-free determinant for square matrices with MultiPoly entries."""
    n = len(rows)
    if n == 0:
        raise PolynomialError("empty matrix")
    nv = rows[0][0].num_vars
    M = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.constant(nv, 1)
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if not M[i][k].is_zero()), None)
        if pivot_row is None:
            return MultiPoly.zero(nv)
        if pivot_row != k:
            M[k], M[pivot_row] = M[pivot_row], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divexact(prev)
            M[i][k] = MultiPoly.zero(nv)
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


def sylvester_resultant(p: MultiPoly, q: MultiPoly, var: int) -> MultiPoly:
    """Resultant evaluated directly as the Sylvester determinant (reference path)."""
    return bareiss_determinant(sylvester_matrix(p, q, var))


# -- univariate helpers over Q ----------------------------------------------------


def univariate_coeffs(p: MultiPoly) -> list:
    """Dense Fraction list (index = power) for a polynomial using one variable.

    The polynomial may formally live in several variables as long as at most
    one of them occurs; the occurring variable's index is returned alongside.
    """
    used = sorted({i for e in p.terms for i, ei in enumerate(e) if ei})
    if len(used) > 1:
        raise PolynomialError("polynomial is not univariate")
    var = used[0] if used else 0
    d = p.degree_in(var)
    out = [Fraction(0)] * (d + 1 if d >= 0 else 1)
    for e, c in p.terms.items():
        out[e[var]] = c
    return out


def poly_from_coeffs(coeffs: Sequence, num_vars: int = 1, var: int = 0) -> MultiPoly:
    """Build a univariate MultiPoly from a dense little-endian coefficient list."""
    terms = {}
    for k, c in enumerate(coeffs):
        c = _as_fraction(c)
        if c:
            e = [0] * num_vars
            e[var] = k
            terms[tuple(e)] = c
    return MultiPoly(num_vars, terms)


def squarefree_part(p: MultiPoly) -> MultiPoly:
    """Squarefree part of a univariate polynomial: p / gcd(p, p'), primitive
    with positive leading coefficient."""
    from . import upoly

    if p.is_zero():
        raise PolynomialError("squarefree part of the zero polynomial")
    used = sorted({i for e in p.terms for i, ei in enumerate(e) if ei})
    if len(used) > 1:
        raise PolynomialError("polynomial is not univariate")
    var = used[0] if used else 0
    dense = univariate_coeffs(p)
    sf = upoly.squarefree_part_q(dense)
    return poly_from_coeffs(sf, p.num_vars, var)


def _content_in(coeffs: list) -> MultiPoly:
    """gcd of a list of MultiPoly (used as the content for a main variable).

    Fast paths: all-constant coefficient lists reduce to a rational gcd, and
    coefficient lists sharing a single variable reduce to the integer PRS.
    """
    from . import upoly

    nonzero = [c for c in coeffs if not c.is_zero()]
    if not nonzero:
        return MultiPoly.zero(coeffs[0].num_vars)
    nv = nonzero[0].num_vars
    if all(c.is_constant() for c in nonzero):
        return MultiPoly.constant(nv, 1)
    used = {i for c in nonzero for e in c.terms for i, ei in enumerate(e) if ei}
    if len(used) == 1:
        var = used.pop()
        dense = None
        for c in nonzero:
            lst = [Fraction(0)] * (c.degree_in(var) + 1)
            for e, coeff in c.terms.items():
                lst[e[var]] += coeff
            zc, _ = upoly.to_integer(lst)
            dense = zc if dense is None else upoly.gcd_z(dense, zc)
            if upoly.degree(dense) == 0:
                return MultiPoly.constant(nv, 1)
        return poly_from_coeffs(dense, nv, var)
    g = None
    for c in nonzero:
        g = c if g is None else poly_gcd(g, c)
        if g.is_constant():
            break
    return g


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Multivariate gcd over Q via the primitive PRS, primitive output with
    positive leading coefficient (constants collapse to 1)."""
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()
    nv = p.num_vars
    if p.is_constant() or q.is_constant():
        return MultiPoly.constant(nv, 1)
    # main variable: one occurring in both if possible
    both = [v for v in range(nv) if p.degree_in(v) > 0 and q.degree_in(v) > 0]
    if not both:
        # no shared variable: the gcd divides each, hence is constant
        return MultiPoly.constant(nv, 1)
    x = both[-1]
    p = p.primitive()
    q = q.primitive()
    cp = _content_in(p.coeffs_in(x))
    cq = _content_in(q.coeffs_in(x))
    pp = p.divexact(cp)
    qq = q.divexact(cq)
    a = pp.coeffs_in(x)
    b = qq.coeffs_in(x)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        if not r:
            b_poly = MultiPoly.from_coeffs_in(nv, x, b)
            cont = _content_in(b)
            result = b_poly.divexact(cont) * poly_gcd(cp, cq)
            return result.primitive()
        r_poly = MultiPoly.from_coeffs_in(nv, x, r)
        cont = _content_in(r)
        r_prim = r_poly.divexact(cont)
        a, b = b, r_prim.coeffs_in(x)
    # b was initially empty: a is the gcd candidate
    a_poly = MultiPoly.from_coeffs_in(nv, x, a)
    return (a_poly.divexact(_content_in(a)) * poly_gcd(cp, cq)).primitive()
