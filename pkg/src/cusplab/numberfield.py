"""Arithmetic in a simple extension Q[t]/(m(t)).

A NumberField wraps a monic modulus; NumberFieldElem values are residue
classes represented by polynomials of degree below deg(m).  Irreducibility
of the modulus is certified best-effort by finding a prime p < 100 modulo
which m stays irreducible (sound when it succeeds).

Uncertified moduli are allowed everywhere: zero tests and inversion work
through gcds, and when a computation meets a genuine zero divisor it raises
ModulusSplit carrying a proper factor of the modulus.  Callers that care
(the singularity classifier, the projection-center solver) catch the split,
refine the field and redo the computation branch by branch, so reducible
eliminants are handled without ever needing a factorization routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import upoly
from .poly import MultiPoly, poly_from_coeffs, univariate_coeffs

CERTIFIED = "certified"
UNVERIFIED = "unverified"
REDUCIBLE = "reducible"


class NumberFieldError(ArithmeticError):
    pass


class ModulusSplit(ArithmeticError):
    """A zero divisor revealed a proper factor of the working modulus."""

    def __init__(self, factor: list):
        super().__init__("modulus splits")
        self.factor = [Fraction(c) for c in factor]


class NumberField:
    """Q[t]/(m(t)) with a monic modulus m of degree >= 1."""

    __slots__ = ("modulus", "degree", "certificate", "status")

    def __init__(self, modulus: Sequence, certificate=None, status=UNVERIFIED):
        m = [Fraction(c) for c in upoly.strip(list(modulus))]
        if len(m) < 2:
            raise NumberFieldError("modulus must have degree at least 1")
        if m[-1] != 1:
            raise NumberFieldError("modulus must be monic")
        self.modulus = tuple(m)
        self.degree = len(m) - 1
        self.certificate = certificate
        self.status = status

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        mp = poly_from_coeffs(self.modulus)
        return f"NumberField({mp!s} = 0, {self.status})"

    def modulus_poly(self) -> MultiPoly:
        return poly_from_coeffs(self.modulus)

    # -- element constructors --------------------------------------------

    def element(self, rep) -> "NumberFieldElem":
        if isinstance(rep, NumberFieldElem):
            if rep.field != self:
                rep = self.element(list(rep.rep))
            return rep
        if isinstance(rep, (int, Fraction)):
            rep = [Fraction(rep)]
        rep = [Fraction(c) for c in rep]
        _, rem = upoly.divmod_q(rep, list(self.modulus))
        rem = rem + [Fraction(0)] * (self.degree - len(rem))
        return NumberFieldElem(self, tuple(rem))

    def zero(self) -> "NumberFieldElem":
        return self.element(0)

    def one(self) -> "NumberFieldElem":
        return self.element(1)

    def generator(self) -> "NumberFieldElem":
        return self.element([0, 1])

    def split(self, factor: list) -> tuple:
        """Split along a monic proper factor g: returns (Q[t]/(g), Q[t]/(m/g))."""
        g = upoly.monic_q(factor)
        cofactor = upoly.divexact_q(list(self.modulus), g)
        return (certify_irreducible(poly_from_coeffs(g)),
                certify_irreducible(poly_from_coeffs(cofactor)))


class NumberFieldElem:
    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: tuple):
        self.field = field
        self.rep = rep

    # -- structure ----------------------------------------------------------

    def rep_poly(self) -> MultiPoly:
        return poly_from_coeffs(self.rep)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.rep[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise NumberFieldError("element is not rational")
        return self.rep[0]

    def __bool__(self):
        """Nonzero test; sound for every root of the modulus.

        With an uncertified modulus an element that is zero in some residue
        branches and not in others raises ModulusSplit rather than guessing.
        """
        dense = upoly.strip(list(self.rep))
        if not dense:
            return False
        if self.field.status == CERTIFIED or len(dense) == 1:
            return True
        g = upoly.gcd_q(dense, list(self.field.modulus))
        if upoly.degree(g) == 0:
            return True
        raise ModulusSplit(upoly.monic_q(g))

    def __eq__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return not bool(self - other)

    def __repr__(self):
        return f"<{self.rep_poly()!s} mod {self.field.modulus_poly()!s}>"

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return NumberFieldElem(self.field, tuple(a + b for a, b in zip(self.rep, other.rep)))

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElem(self.field, tuple(-a for a in self.rep))

    def __sub__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        prod = upoly.mul(upoly.strip(list(self.rep)), upoly.strip(list(other.rep)))
        return self.field.element(prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "NumberFieldElem":
        dense = upoly.strip(list(self.rep))
        if not dense:
            raise ZeroDivisionError("inverse of zero in number field")
        g, s, _ = upoly.xgcd_q(dense, list(self.field.modulus))
        if upoly.degree(g) != 0:
            raise ModulusSplit(upoly.monic_q(g))
        return self.field.element(s)

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(self.field, other) * self.inverse()


def _coerce(field: NumberField, value):
    if isinstance(value, NumberFieldElem):
        if value.field != field:
            return None
        return value
    if isinstance(value, (int, Fraction)):
        return field.element(value)
    return None


# -- public operations -----------------------------------------------------------


def certify_irreducible(m) -> NumberField:
    """Build a NumberField from a monic modulus, certifying irreducibility when
    a prime below 100 keeps m irreducible.

    Detectable reducibility (rational roots, degree-pattern splits are *not*
    searched for) flags the field as reducible; otherwise failure to certify
    leaves the field usable but unverified.
    """
    if isinstance(m, MultiPoly):
        dense = univariate_coeffs(m)
    else:
        dense = [Fraction(c) for c in m]
    dense = upoly.strip(list(dense))
    if len(dense) < 2:
        raise NumberFieldError("modulus must be monic of degree >= 1")
    if dense[-1] != 1:
        raise NumberFieldError("modulus must be monic")
    deg = len(dense) - 1
    if deg == 1:
        return NumberField(dense, certificate=(0, "linear modulus"), status=CERTIFIED)
    if upoly.rational_roots(dense):
        return NumberField(dense, certificate=None, status=REDUCIBLE)
    for p in upoly.CERT_PRIMES:
        try:
            reduced = upoly.mod_p(dense, p)
        except ZeroDivisionError:
            continue
        if upoly.degree(reduced) != deg:
            continue
        if upoly.is_irreducible_p(reduced, p):
            return NumberField(dense, certificate=(p, f"irreducible modulo {p}"), status=CERTIFIED)
    return NumberField(dense, certificate=None, status=UNVERIFIED)


def nf_invert(e: NumberFieldElem) -> NumberFieldElem:
    """Multiplicative inverse; raises on zero or on a zero divisor."""
    try:
        return e.inverse()
    except ModulusSplit as exc:
        raise NumberFieldError(
            "zero divisor: modulus is reducible, shares factor "
            f"{poly_from_coeffs(exc.factor)!s}") from exc


def eliminate_to_minimal_poly(relations: Sequence[MultiPoly], eliminate_var: int = 0,
                              target_var: int = 1) -> MultiPoly:
    """Eliminate one variable from a zero-dimensional pair of constraints.

    Returns a monic univariate polynomial (in a 1-variable ring) whose roots
    include the possible values of the target coordinate; the caller factors
    or certifies separately.
    """
    from .poly import resultant

    if len(relations) < 2:
        raise NumberFieldError("need at least two relations")
    with_var = [r for r in relations if r.degree_in(eliminate_var) > 0]
    without = [r for r in relations if r.degree_in(eliminate_var) <= 0 and not r.is_zero()]
    acc: list = []
    base = with_var[0] if with_var else None
    for other in with_var[1:]:
        res = resultant(base, other, eliminate_var)
        acc.append(res)
    acc.extend(without)
    if not acc:
        raise NumberFieldError("positive-dimensional input")
    g: list = []
    for r in acc:
        if r.is_zero():
            continue
        if r.degree_in(target_var) <= 0 and not r.is_constant():
            raise NumberFieldError("relations involve more than two variables")
        g = upoly.gcd_z(g, upoly.to_integer(_dense_in(r, target_var))[0])
    if not g:
        raise NumberFieldError("positive-dimensional input")
    if upoly.degree(g) == 0:
        raise NumberFieldError("inconsistent relations: elimination is a nonzero constant")
    return poly_from_coeffs(upoly.monic_q(g))


def _dense_in(p: MultiPoly, var: int) -> list:
    d = p.degree_in(var)
    out = [Fraction(0)] * (d + 1 if d >= 0 else 1)
    for e, c in p.terms.items():
        if any(ei for i, ei in enumerate(e) if i != var):
            raise NumberFieldError("polynomial is not univariate in the target variable")
        out[e[var]] = c
    return out


# -- algebraic points ----------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicPoint:
    """Projective point with coordinates in Q (field None) or in a NumberField."""

    field: NumberField | None
    coords: tuple

    def __post_init__(self):
        if not self.coords:
            raise NumberFieldError("empty coordinate tuple")
        vals = list(self.coords)
        if self.field is None:
            vals = [Fraction(v) for v in vals]
        if all(not _nonzero(v) for v in vals):
            raise NumberFieldError("all coordinates are zero")
        object.__setattr__(self, "coords", tuple(vals))

    def degree(self) -> int:
        return 1 if self.field is None else self.field.degree

    def normalized(self) -> "AlgebraicPoint":
        """Scale so the last nonzero coordinate is 1."""
        vals = list(self.coords)
        idx = max(i for i, v in enumerate(vals) if _nonzero(v))
        inv = (1 / vals[idx]) if self.field is None else vals[idx].inverse()
        return AlgebraicPoint(self.field, tuple(v * inv for v in vals))

    def evaluate(self, p: MultiPoly):
        return p.evaluate(list(self.coords))

    def __repr__(self):
        inner = " : ".join(str(c) for c in self.coords)
        return f"[{inner}]"


def _nonzero(v) -> bool:
    return bool(v)


# -- dense univariate polynomials over a number field --------------------------------


def field_dense(field: NumberField, p: MultiPoly, main_var: int, values: Sequence) -> list:
    """Specialize all variables except main_var, giving a dense list over the field.

    `values` holds one entry per variable; the main variable's entry is ignored.
    """
    coeffs = p.coeffs_in(main_var)
    vals = list(values)
    vals[main_var] = field.zero()
    out = []
    for c in coeffs:
        v = c.evaluate(vals)
        out.append(v if isinstance(v, NumberFieldElem) else field.element(v))
    return fstrip(out)


def fstrip(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def fgcd_monic(field: NumberField, a: list, b: list) -> list:
    """Monic gcd of dense polynomials over the field (Euclid; may raise ModulusSplit)."""
    a = fstrip(list(a))
    b = fstrip(list(b))
    while b:
        a, b = b, _frem(field, a, b)
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _frem(field: NumberField, a: list, b: list) -> list:
    a = fstrip(list(a))
    inv = b[-1].inverse()
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] * inv
        for i, bc in enumerate(b):
            a[i + k] = a[i + k] - c * bc
        fstrip(a)
    return a


def feval(a: list, x):
    acc = None
    for c in reversed(a):
        acc = c if acc is None else acc * x + c
    return acc
