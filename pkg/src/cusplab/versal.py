"""The versal family y^2 = x^3 + a x + b of the ordinary cusp.

j-invariants of smooth fibers, discriminant membership, and limits of j
along arcs (a(s), b(s)) into the origin.  Arcs are truncated power series
with exact coefficients; the limit logic tracks how far each derived series
is reliable and reports indeterminacy instead of guessing.

Convention: j = 1728 * 4a^3 / (4a^3 + 27b^2), so b = 0 gives 1728 and
a = 0 gives 0; the singular locus is 4a^3 + 27b^2 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numberfield import NumberField, NumberFieldElem, certify_irreducible

INF = math.inf


class VersalError(ValueError):
    pass


@dataclass(frozen=True)
class VersalPoint:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))


@dataclass(frozen=True)
class JValue:
    """Exact j-limit: finite rational, infinite, or indeterminate at truncation."""

    kind: str  # "finite" | "infinite" | "indeterminate"
    value: Fraction | None = None
    note: str = ""

    @classmethod
    def finite(cls, v) -> "JValue":
        return cls("finite", Fraction(v))

    @classmethod
    def infinite(cls, note="") -> "JValue":
        return cls("infinite", None, note)

    @classmethod
    def indeterminate(cls, note) -> "JValue":
        return cls("indeterminate", None, note)

    def __repr__(self):
        if self.kind == "finite":
            return f"JValue({self.value})"
        return f"JValue({self.kind}: {self.note})"


def _disc(a, b):
    return 4 * a ** 3 + 27 * b ** 2


def j_invariant(p: VersalPoint) -> JValue:
    """j of the fiber at (a, b); the fiber must be smooth."""
    d = _disc(p.a, p.b)
    if d == 0:
        raise VersalError("singular fiber: 4a^3 + 27b^2 = 0")
    return JValue.finite(Fraction(6912) * p.a ** 3 / d)


def discriminant_membership(p: VersalPoint) -> bool:
    """True exactly on the singular locus 4a^3 + 27b^2 = 0."""
    return _disc(p.a, p.b) == 0


# -- truncated series ------------------------------------------------------------


class _Series:
    """Sparse truncated series: known coefficients below `prec` only."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: dict, prec):
        self.coeffs = {k: c for k, c in coeffs.items() if k < prec and _nz(c)}
        self.prec = prec

    def order(self):
        """(order, leading coeff) of the known part, or (None, None) if the
        series is zero as far as it is known."""
        if not self.coeffs:
            return None, None
        k = min(self.coeffs)
        return k, self.coeffs[k]

    def known_floor(self):
        """A lower bound for the true order: known order, else prec."""
        k, _ = self.order()
        return self.prec if k is None else k

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
        return _Series(coeffs, prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _Series({k: c * other for k, c in self.coeffs.items()}, self.prec)
        prec = min(self.prec + other.known_floor(), other.prec + self.known_floor())
        coeffs: dict = {}
        for i, ci in self.coeffs.items():
            for j, cj in other.coeffs.items():
                if i + j < prec:
                    coeffs[i + j] = coeffs.get(i + j, 0) + ci * cj
        return _Series(coeffs, prec)

    __rmul__ = __mul__

    def cubed(self):
        return self * self * self


def _nz(c) -> bool:
    return bool(c)


DEFAULT_TRUNCATION = 12


@dataclass(frozen=True)
class Arc:
    """Arc (a(s), b(s)) with a(0) = b(0) = 0, coefficients for s^1..s^T.

    Coefficients are Fractions, or elements of `field` when the arc was built
    over an extension (see find_arc_for_j).
    """

    a: tuple
    b: tuple
    truncation: int = DEFAULT_TRUNCATION
    field: NumberField | None = None

    def __post_init__(self):
        T = self.truncation
        if T < 1:
            raise VersalError("truncation order must be at least 1")
        a = _pad(self.a, T)
        b = _pad(self.b, T)
        if all(not _nz(c) for c in a) and all(not _nz(c) for c in b):
            raise VersalError(f"both series vanish to truncation order {T}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def a_series(self) -> _Series:
        return _Series({i + 1: c for i, c in enumerate(self.a)}, self.truncation + 1)

    def b_series(self) -> _Series:
        return _Series({i + 1: c for i, c in enumerate(self.b)}, self.truncation + 1)


def _pad(coeffs: Sequence, T: int) -> tuple:
    out = list(coeffs)
    if len(out) > T:
        raise VersalError("more coefficients than the truncation order")
    return tuple(out) + (Fraction(0),) * (T - len(out))


def arc_j_limit(arc: Arc) -> tuple:
    """Limit of j along the arc, with the tangency flag.

    Returns (JValue, tangent_to_b_axis).  The limit is 0 when the numerator
    6912 a^3 vanishes deeper than the denominator 4a^3 + 27b^2, 1728 in the
    opposite strict case through the a^3 cross term, the exact leading-ratio
    value at equal orders, infinite when only the denominator's leading part
    cancels, and indeterminate when the truncation cannot resolve the orders.
    """
    a = arc.a_series()
    b = arc.b_series()
    tangent = b.known_floor() > a.known_floor()

    a3 = a.cubed()
    num = a3 * 6912
    den = a3 * 4 + (b * b) * 27

    kn, cn = num.order()
    kd, cd = den.order()
    if kd is not None:
        if kn is None:
            if num.prec > kd:
                return JValue.finite(0), tangent
            return JValue.indeterminate(
                f"numerator order unresolved at truncation {arc.truncation}"), tangent
        if kn > kd:
            return JValue.finite(0), tangent
        if kn < kd:
            return JValue.infinite("denominator vanishes to higher order"), tangent
        val = cn * _invert(cd)
        return JValue.finite(_rationalize(val)), tangent
    if kn is not None:
        return JValue.indeterminate(
            f"denominator vanishes to truncation order {arc.truncation}"), tangent
    return JValue.indeterminate(
        f"orders unresolved at truncation {arc.truncation}"), tangent


def _invert(c):
    if isinstance(c, NumberFieldElem):
        return c.inverse()
    return 1 / Fraction(c)


def _rationalize(v):
    if isinstance(v, NumberFieldElem):
        return v.rational_value()
    return Fraction(v)


def _icbrt(n: int) -> int:
    """Integer cube root of n >= 0 (floor)."""
    if n < 0:
        raise ValueError
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    return x


def _rational_cbrt(r: Fraction) -> Fraction | None:
    """Exact rational cube root, or None."""
    sign = -1 if r < 0 else 1
    num, den = abs(r.numerator), r.denominator
    cn, cd = _icbrt(num), _icbrt(den)
    if cn ** 3 == num and cd ** 3 == den:
        return Fraction(sign * cn, cd)
    return None


def find_arc_for_j(j0, truncation: int = DEFAULT_TRUNCATION) -> Arc:
    """A tangent arc whose j-limit is exactly j0.

    j0 = 0 uses (0, s^3); j0 = 1728 uses (s, s^2); otherwise (alpha s^2, s^3)
    where alpha solves j0 (4 alpha^3 + 27) = 6912 alpha^3 -- rational when that
    cubic has a rational root, else a generator of Q[t]/(t^3 - r).
    """
    j0 = Fraction(j0)
    if j0 == 0:
        return Arc((), (0, 0, Fraction(1)), truncation)
    if j0 == 1728:
        return Arc((Fraction(1),), (0, Fraction(1)), truncation)
    r = 27 * j0 / (6912 - 4 * j0)
    alpha = _rational_cbrt(r)
    if alpha is not None:
        return Arc((0, alpha), (0, 0, Fraction(1)), truncation)
    field = certify_irreducible([-r, 0, 0, 1])
    gen = field.generator()
    return Arc((field.zero(), gen), (field.zero(), field.zero(), field.one()),
               truncation, field=field)
