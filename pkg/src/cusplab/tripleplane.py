"""Cubic surfaces x3^3 + c1*f2*x3 + c2*f3, their branch loci, and the
bilinear system cutting out the projection centers.

The key objects:

* branch_locus: Res_{x3}(F3, dF3/dx3), a degree-6 plane sextic equal to
  4 c1^3 f2^3 + 27 c2^2 f3^2 under this package's resultant convention.
* build_condition_system: the ten bilinear equations, keyed by the quadratic
  monomials, expressing that the polar of a family member G(beta) along v is
  proportional to dF3/dx3.  mu stands for the bundled right side
  lambda - sum(beta_j v_j) - v3, which keeps every row bilinear.
* solve_projection_centers: exact chart-by-chart solve.  In each chart the
  system is linear in (beta, mu) with coefficients polynomial in the free
  v's; elimination pivots on constants when possible and otherwise branches
  on a pivot being zero or nonzero, leaving polynomial consistency
  conditions that are solved by iterated resultants and exact root
  extraction (number-field packaging included).  Solutions with recovered
  lambda = 0 are reported separately, never silently dropped.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import upoly
from .curves import PlaneCurve
from .linalg import RationalMatrix, rank_and_kernel
from .numberfield import (ModulusSplit, NumberField, NumberFieldElem,
                          certify_irreducible, fgcd_monic)
from .poly import MultiPoly, PolynomialError, poly_gcd, resultant

CONVENTIONS = {"lemma": (Fraction(-3), Fraction(2)), "corollary": (Fraction(1), Fraction(1))}

MONOMIAL_KEYS = ("x0x3", "x1x3", "x2x3", "x0x1", "x0x2", "x1x2",
                 "x1^2", "x2^2", "x0^2", "x3^2")
_MONO_EXP = {
    "x0x3": (1, 0, 0, 1), "x1x3": (0, 1, 0, 1), "x2x3": (0, 0, 1, 1),
    "x0x1": (1, 1, 0, 0), "x0x2": (1, 0, 1, 0), "x1x2": (0, 1, 1, 0),
    "x1^2": (0, 2, 0, 0), "x2^2": (0, 0, 2, 0), "x0^2": (2, 0, 0, 0),
    "x3^2": (0, 0, 0, 2),
}


class TriplePlaneError(ValueError):
    pass


def _embed4(p: MultiPoly) -> MultiPoly:
    if p.num_vars == 4:
        return p
    return MultiPoly(4, {e + (0,) * (4 - p.num_vars): c for e, c in p.terms.items()})


def _restrict3(p: MultiPoly) -> MultiPoly:
    if any(e[3] for e in p.terms):
        raise TriplePlaneError("polynomial still involves x3")
    return MultiPoly(3, {e[:3]: c for e, c in p.terms.items()})


@dataclass(frozen=True)
class CubicSurface:
    F3: MultiPoly
    c1: Fraction
    c2: Fraction
    f2: MultiPoly
    f3: MultiPoly

    def derivative_x3(self) -> MultiPoly:
        return self.F3.derivative(3)

    def contact_quadric(self) -> MultiPoly:
        """Primitive part of dF3/dx3 (content removed), x3^2-coefficient positive."""
        q = self.derivative_x3().primitive()
        if q.coefficient((0, 0, 0, 2)) < 0:
            q = -q
        return q


def build_cubic_surface(f2: MultiPoly, f3: MultiPoly, c1, c2) -> CubicSurface:
    """F3 = x3^3 + c1*f2*x3 + c2*f3, with (c1, c2) nonzero rationals."""
    c1, c2 = Fraction(c1), Fraction(c2)
    if c1 == 0 or c2 == 0:
        raise TriplePlaneError("convention coefficients must be nonzero")
    if not (f2.is_homogeneous() and f2.total_degree() == 2):
        raise TriplePlaneError("f2 must be homogeneous of degree 2")
    if not (f3.is_homogeneous() and f3.total_degree() == 3):
        raise TriplePlaneError("f3 must be homogeneous of degree 3")
    x3 = MultiPoly.variable(4, 3)
    F3 = x3 ** 3 + c1 * _embed4(f2) * x3 + c2 * _embed4(f3)
    return CubicSurface(F3=F3, c1=c1, c2=c2, f2=f2, f3=f3)


def convention(name_or_pair) -> tuple:
    if isinstance(name_or_pair, str):
        try:
            return CONVENTIONS[name_or_pair]
        except KeyError:
            raise TriplePlaneError(f"unknown convention {name_or_pair!r}") from None
    c1, c2 = name_or_pair
    return Fraction(c1), Fraction(c2)


def branch_locus(surface: CubicSurface) -> PlaneCurve:
    """Res_{x3}(F3, dF3/dx3) as a plane sextic.

    Equals 4 c1^3 f2^3 + 27 c2^2 f3^2 exactly (the cubic-in-x3 discriminant
    identity Res(t^3+pt+q, 3t^2+p) = 4p^3 + 27q^2 applied fiberwise).
    """
    r = resultant(surface.F3, surface.derivative_x3(), 3)
    if r.is_zero():
        raise TriplePlaneError("degenerate surface: branch resultant vanishes")
    curve = _restrict3(r)
    return PlaneCurve(curve)


def branch_locus_identity_holds(surface: CubicSurface) -> bool:
    r = _restrict3(resultant(surface.F3, surface.derivative_x3(), 3))
    expected = (4 * surface.c1 ** 3 * surface.f2 ** 3
                + 27 * surface.c2 ** 2 * surface.f3 ** 2)
    return r == expected


@dataclass(frozen=True)
class CubicFamily:
    """G(beta) = F3 + sum_j beta_j x_j dF3/dx3, linear in beta."""

    base: MultiPoly
    beta_parts: tuple  # x_j * dF3/dx3 for j = 0..3

    def at(self, beta: Sequence) -> MultiPoly:
        g = self.base
        for j, bj in enumerate(beta):
            if bj:
                g = g + Fraction(bj) * self.beta_parts[j]
        return g


def family_G(surface: CubicSurface) -> CubicFamily:
    q = surface.derivative_x3()
    xs = [MultiPoly.variable(4, j) for j in range(4)]
    return CubicFamily(base=surface.F3, beta_parts=tuple(x * q for x in xs))


def cubic_space_independence(surface: CubicSurface) -> tuple:
    """Rank of the span {F3, x0 Q, x1 Q, x2 Q, x3 Q}, Q the contact quadric.

    Returns (rank, labels); rank 5 confirms the five-dimensional family used
    in the projection-center analysis.
    """
    q = surface.contact_quadric()
    xs = [MultiPoly.variable(4, j) for j in range(4)]
    basis = [surface.F3] + [x * q for x in xs]
    monos = sorted(
        (e for e in itertools.product(range(4), repeat=4) if sum(e) == 3),
        reverse=True)
    rows = [[p.coefficient(e) for e in monos] for p in basis]
    rank, _ = rank_and_kernel(RationalMatrix.from_rows(rows))
    labels = ("F3", "x0*Q", "x1*Q", "x2*Q", "x3*Q")
    return rank, labels


# -- the bilinear condition system ---------------------------------------------------

# unknown order inside each row matrix: rows of L are (v0, v1, v2, v3, mu),
# columns are (1, beta0, beta1, beta2, beta3)


@dataclass(frozen=True)
class BilinearRow:
    key: str
    matrix: tuple  # 5 x 5 Fractions

    def value(self, v: Sequence, beta: Sequence, mu):
        """Exact evaluation; entries may be Fractions or field elements."""
        total = None
        left = list(v) + [mu]
        right_tail = list(beta)
        for i in range(5):
            row = self.matrix[i]
            acc = None
            if row[0]:
                acc = row[0] * left[i]
            for j in range(4):
                if row[1 + j]:
                    term = row[1 + j] * left[i] * right_tail[j]
                    acc = term if acc is None else acc + term
            if acc is not None:
                total = acc if total is None else total + acc
        return Fraction(0) if total is None else total

    def poly_string(self) -> str:
        names_left = ("v0", "v1", "v2", "v3", "mu")
        names_right = ("", "b0", "b1", "b2", "b3")
        pieces = []
        for i in range(5):
            for j in range(5):
                c = self.matrix[i][j]
                if not c:
                    continue
                mono = names_left[i] + ("*" + names_right[j] if j else "")
                pieces.append((c, mono))
        out = ""
        for c, mono in pieces:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}*{mono}"
            out += (sign if out or sign == "-" else "") + body
        return out or "0"


@dataclass(frozen=True)
class BilinearSystem:
    rows: tuple  # ten BilinearRow in the monomial-key order
    surface: CubicSurface

    def row(self, key: str) -> BilinearRow:
        return next(r for r in self.rows if r.key == key)


def _scan_order():
    # graded order on the bilinear terms: v_i*b_j first (v-major), then
    # mu*b_j, then v_i, then mu
    order = [(i, 1 + j) for i in range(4) for j in range(4)]
    order += [(4, 1 + j) for j in range(4)]
    order += [(i, 0) for i in range(4)]
    order += [(4, 0)]
    return order


_SCAN = _scan_order()


def _normalize_row(key: str, L: list) -> BilinearRow:
    """Divide by the rational content and fix the sign of the leading term."""
    num_gcd = 0
    den_lcm = 1
    for i in range(5):
        for j in range(5):
            c = L[i][j]
            if c:
                num_gcd = math.gcd(num_gcd, abs(c.numerator))
                den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    if num_gcd == 0:
        raise TriplePlaneError(f"empty condition row {key}")
    content = Fraction(num_gcd, den_lcm)
    lead = next(L[i][j] for i, j in _SCAN if L[i][j])
    if lead < 0:
        content = -content
    scaled = tuple(tuple(c / content for c in row) for row in L)
    return BilinearRow(key=key, matrix=scaled)


def build_condition_system(f2: MultiPoly, f3: MultiPoly, conv="corollary") -> BilinearSystem:
    """Collect the ten monomial coefficients of polar_v(G) - lambda * dF3/dx3.

    Each row is bilinear in (v, mu) and (1, beta) after substituting
    mu = lambda - sum(beta_j v_j) - v3; rows are content-normalized with a
    positive leading coefficient.
    """
    c1, c2 = convention(conv)
    surface = build_cubic_surface(f2, f3, c1, c2)
    q = surface.derivative_x3()
    dF = [surface.F3.derivative(i) for i in range(3)]
    dQ = [q.derivative(i) for i in range(4)]
    xs = [MultiPoly.variable(4, j) for j in range(4)]
    rows = []
    for key in MONOMIAL_KEYS:
        e = _MONO_EXP[key]
        L = [[Fraction(0)] * 5 for _ in range(5)]
        for i in range(3):
            L[i][0] = dF[i].coefficient(e)
        for i in range(4):
            for j in range(4):
                L[i][1 + j] = (xs[j] * dQ[i]).coefficient(e)
        L[4][0] = -q.coefficient(e)
        rows.append(_normalize_row(key, L))
    return BilinearSystem(rows=tuple(rows), surface=surface)


def beta_zero_matrix(system: BilinearSystem) -> RationalMatrix:
    """The 10 x 5 matrix of the system restricted to beta = 0 (unknowns v, mu)."""
    rows = []
    for r in system.rows:
        rows.append([r.matrix[i][0] for i in range(5)])
    return RationalMatrix.from_rows(rows)


# -- solutions ------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectionCenter:
    """One exact solution: projective v, affine beta, bundled mu, recovered lambda.

    field is None for rational solutions, else the NumberField containing all
    coordinates (the packet stands for its conjugates)."""

    v: tuple
    beta: tuple
    mu: object
    lam: object
    field: NumberField | None

    def sort_key(self):
        if self.field is None:
            return (0, tuple(map(str, self.v)), tuple(map(str, self.beta)))
        return (1, tuple(map(str, self.field.modulus)), str(self.v))

    def __repr__(self):
        vtxt = ":".join(str(c) for c in self.v)
        btxt = ",".join(str(c) for c in self.beta)
        return f"(v=[{vtxt}], beta=({btxt}), lambda={self.lam})"


@dataclass(frozen=True)
class SolutionSet:
    centers: tuple          # lambda != 0 solutions (the projection centers)
    lambda_zero: tuple      # solutions of the ten rows with recovered lambda = 0
    components: tuple       # textual descriptions of non-isolated branches
    complete: bool

    @property
    def isolated(self) -> tuple:
        return self.centers


# -- chart-based exact solver ----------------------------------------------------------

_BRANCH_CAP = 2000
_ELIM_PARTNERS = 3  # resultant partners per elimination step (superset + filter)


def substitute_var(p: MultiPoly, var: int, expr: MultiPoly) -> MultiPoly:
    """Replace one variable by a polynomial in the same ambient ring."""
    if p.degree_in(var) <= 0:
        return p
    nv = p.num_vars
    reps = [MultiPoly.variable(nv, i) for i in range(nv)]
    reps[var] = expr
    return p.substitute(reps)


def _linear_solve_entry(e: MultiPoly):
    """If e is linear in some variable with a nonzero constant coefficient,
    return (var, expr) with e = 0 equivalent to var = expr; else None."""
    for k in range(e.num_vars):
        if e.degree_in(k) != 1:
            continue
        coeff_terms = {}
        rest_terms = {}
        for expo, c in e.terms.items():
            if expo[k] == 1:
                low = list(expo)
                low[k] = 0
                coeff_terms[tuple(low)] = c
            else:
                rest_terms[expo] = c
        coeff = MultiPoly(e.num_vars, coeff_terms)
        if not coeff.is_constant():
            continue
        alpha = coeff.constant_value()
        rest = MultiPoly(e.num_vars, rest_terms)
        return k, rest * (-1 / alpha)
    return None


@dataclass
class _Leaf:
    pivots: list          # (col, row6) in elimination order
    constraints: list     # polynomials in the chart parameters that must vanish
    assumptions: list     # polynomials assumed nonzero on this branch
    substitutions: list   # (var, expr) applied in order: var := expr
    free_cols: list


def _param_eliminate(rows: list, nv: int) -> tuple:
    """Case-splitting Gaussian elimination on [A(u) | rhs(u)], unknowns in
    columns 0..4.

    Pivots on constant entries outright; a polynomial pivot branches into
    "nonzero" (fraction-free elimination, assumption recorded) and "zero".
    Zero branches substitute the entry away whenever it is linear in a
    parameter with constant coefficient, which keeps the tree small.
    Returns (leaves, overflowed)."""
    leaves = []
    stack = [(rows, [], [], [], [])]
    overflow = False
    while stack:
        if len(leaves) + len(stack) > _BRANCH_CAP:
            overflow = True
            break
        rows, pivots, constraints, assumptions, subs = stack.pop()
        rows = [r for r in rows if any(not c.is_zero() for c in r)]
        # consistency rows: no unknowns left
        next_rows = []
        dead = False
        new_constraints = list(constraints)
        for r in rows:
            if all(r[j].is_zero() for j in range(5)):
                rhs = _divide_out(r[5], assumptions)
                if rhs.is_constant():
                    if rhs.constant_value() != 0:
                        dead = True
                        break
                elif rhs not in new_constraints:
                    new_constraints.append(rhs)
            else:
                next_rows.append(r)
        if dead:
            continue
        rows = next_rows
        # pivot choice: constants first, else cheapest polynomial entry
        const_piv = None
        poly_piv = None
        poly_cost = None
        for i, r in enumerate(rows):
            for j in range(5):
                e = r[j]
                if e.is_zero():
                    continue
                if e.is_constant():
                    const_piv = (i, j)
                    break
                cost = (e.total_degree(), len(e.terms))
                if poly_cost is None or cost < poly_cost:
                    poly_cost = cost
                    poly_piv = (i, j)
            if const_piv:
                break
        if const_piv is None and poly_piv is None:
            free = [j for j in range(5) if not any(p[0] == j for p in pivots)]
            leaves.append(_Leaf(pivots, new_constraints, assumptions, subs, free))
            continue
        if const_piv is not None:
            i, j = const_piv
            piv_row = rows[i]
            pv = piv_row[j].constant_value()
            rest = []
            for k, r in enumerate(rows):
                if k == i:
                    continue
                if r[j].is_zero():
                    rest.append(r)
                else:
                    factor = r[j] * (1 / pv)
                    rest.append(_scale_row([r[t] - factor * piv_row[t] for t in range(6)]))
            stack.append((rest, pivots + [(j, piv_row)], new_constraints, assumptions, subs))
            continue
        # branch on a polynomial pivot
        i, j = poly_piv
        piv_row = rows[i]
        e_raw = piv_row[j]
        e = e_raw.primitive()  # same zero set; nicer assumption bookkeeping
        # branch e != 0: fraction-free elimination
        rest = []
        for k, r in enumerate(rows):
            if k == i:
                continue
            if r[j].is_zero():
                rest.append(r)
            else:
                rest.append(_scale_row([e_raw * r[t] - r[j] * piv_row[t] for t in range(6)]))
        stack.append((rest, pivots + [(j, piv_row)], new_constraints,
                      assumptions + [e], subs))
        # branch e == 0: substitute a parameter away when possible
        lin = _linear_solve_entry(e)
        if lin is not None:
            var, expr = lin
            sub_rows = [[substitute_var(c, var, expr) for c in r] for r in rows]
            sub_cons = [substitute_var(c, var, expr) for c in new_constraints]
            sub_assum = [substitute_var(a, var, expr) for a in assumptions]
            sub_pivots = [(col, [substitute_var(c, var, expr) for c in r6])
                          for col, r6 in pivots]
            stack.append((sub_rows, sub_pivots, sub_cons, sub_assum,
                          subs + [(var, expr)]))
        else:
            zeroed = [list(r) for r in rows]
            zeroed[i][j] = MultiPoly.zero(e.num_vars)
            stack.append((zeroed, list(pivots), new_constraints + [e],
                          list(assumptions), list(subs)))
    return leaves, overflow


def _scale_row(row: list) -> list:
    """Divide a row by the rational gcd of its entries' contents (an equation
    may be scaled by any nonzero rational; this tames coefficient growth)."""
    import math as _math

    num = 0
    den = 1
    for entry in row:
        for c in entry.terms.values():
            num = _math.gcd(num, abs(c.numerator))
            den = den * c.denominator // _math.gcd(den, c.denominator)
    if num in (0, 1) and den == 1:
        return row
    scale = Fraction(den, num)
    return [entry * scale for entry in row]


def _assumption_factors(assumptions: list) -> list:
    """Elementary nonzero factors implied by the assumptions.

    A product assumed nonzero makes each factor nonzero; variables are pulled
    out of the monomial content and the primitive cofactor is kept whole."""
    factors = []
    seen = set()
    for e in assumptions:
        if e.is_zero() or e.is_constant():
            continue
        nv = e.num_vars
        mexp = [min(t[k] for t in e.terms) for k in range(nv)]
        for k, m in enumerate(mexp):
            if m > 0:
                var = MultiPoly.variable(nv, k)
                if var not in seen:
                    seen.add(var)
                    factors.append(var)
        cof = e.divexact(MultiPoly.monomial(nv, mexp)).primitive()
        if not cof.is_constant() and cof not in seen:
            seen.add(cof)
            factors.append(cof)
    return factors


_PROBE_LINES = (
    ((2, 1), (3, -1), (5, 2), (7, -3)),
    ((1, 4), (-2, 3), (3, -5), (4, 1)),
)


def _line_restriction(p: MultiPoly, line) -> list:
    """Dense integer coefficients of p restricted to u_i = a_i*t + b_i."""
    nv = p.num_vars
    t = MultiPoly.variable(1, 0)
    reps = [MultiPoly.constant(1, line[i][0]) * t + line[i][1] for i in range(nv)]
    restricted = p.substitute(reps)
    dense = [Fraction(0)] * (restricted.degree_in(0) + 1)
    for e, c in restricted.terms.items():
        dense[e[0]] += c
    return upoly.to_integer(dense)[0]


def _probably_coprime(p: MultiPoly, e: MultiPoly) -> bool:
    """Cheap sound-for-speed filter: nonconstant common factors survive
    restriction to a generic line, so two constant line-gcds mean the exact
    multivariate gcd is (almost surely) constant.  Only used to skip exact
    gcd work; a false positive can at worst leave a redundant factor in a
    constraint, never change a solution."""
    for line in _PROBE_LINES:
        a = _line_restriction(p, line)
        b = _line_restriction(e, line)
        if not a or not b:
            return False
        if upoly.degree(upoly.gcd_z(a, b)) > 0:
            return False
    return True


def _divide_out(p: MultiPoly, assumptions: list) -> MultiPoly:
    """Strip factors that are assumed nonzero on this branch (and the content).

    Any common divisor of p and an assumed-nonzero polynomial is itself
    nonzero on the branch, so it can be cancelled; gcds catch factors hiding
    inside composite assumption products.  A line-restriction probe skips
    the exact multivariate gcd for obviously coprime pairs."""
    if p.is_zero() or p.is_constant():
        return p
    p = p.primitive()
    for e in assumptions:
        if e.is_zero() or e.is_constant():
            continue
        if _probably_coprime(p, e):
            continue
        if p.total_degree() + e.total_degree() > 40 or len(p.terms) + len(e.terms) > 250:
            continue  # keep the redundant factor rather than risk a gcd blowup
        while not p.is_constant():
            g = poly_gcd(p, e)
            if g.is_constant():
                break
            p = p.divexact(g).primitive()
    return p


def _dense_in_var(p: MultiPoly, var: int, values: dict, field) -> list:
    """Dense coefficient list of p in `var` after substituting `values`
    (a {var: element} map) for the other variables."""
    coeffs = p.coeffs_in(var)
    out = []
    zero = Fraction(0)
    for c in coeffs:
        vals = [values.get(i, zero) for i in range(p.num_vars)]
        vals[var] = zero
        v = c.evaluate(vals)
        if field is not None and not isinstance(v, NumberFieldElem):
            v = field.element(v)
        out.append(v)
    if field is None:
        return upoly.strip([Fraction(v) for v in out])
    from .numberfield import fstrip
    return fstrip(out)


def _partial_point_excluded(assumptions, z, values, field) -> bool:
    """True when some nonzero assumption vanishes identically along the z-line
    above the partial point, so the line carries no admissible solutions."""
    for e in assumptions:
        if e.degree_in(z) < 0:
            continue
        dense = _dense_in_var(e, z, values, field)
        if not dense:
            return True
    return False


def _zero_dim_solve(polys: list, var_list: list, assumptions: list = (), depth: int = 0):
    """Solve a polynomial system in the variables `var_list`.

    Returns (assignments, complete, notes).  An assignment is
    (field or None, {var: value}, line) where `line` is normally None; a
    (dep_var, expr, free_var) line is a one-parameter candidate component
    (typically extraneous junk shared by iterated resultants) that the
    caller must fiber over and filter.

    Strategy per level: reduce by the branch's nonzero assumptions, apply
    exact substitutions for constraints linear in a variable, eliminate the
    last variable through pairwise resultants (rotating the variable when a
    shared factor degenerates everything), and as a final fallback split off
    the common factor of the whole system.  Every partial point is verified
    against the fibers, so extraneous candidates are dropped, never added.
    """
    assumptions = list(assumptions)
    polys = [_divide_out(p, assumptions) for p in polys if not p.is_zero()]
    polys = sorted(set(polys), key=lambda p: (p.total_degree(), len(p.terms)))
    for p in polys:
        if p.is_constant():
            return [], True, []
    if not var_list:
        return [(None, {}, None)], True, []
    if not polys:
        return [], True, [f"{len(var_list)} chart parameter(s) unconstrained"]
    if depth > 8:
        return [], False, ["solver recursion depth exceeded"]

    # exact substitution: a constraint linear in some variable removes it
    for p in polys:
        lin = _linear_solve_entry(p)
        if lin is not None and lin[0] in var_list:
            var, expr = lin
            rest = [substitute_var(q, var, expr) for q in polys if q is not p]
            sub, ok, notes = _zero_dim_solve(rest, [v for v in var_list if v != var],
                                             assumptions, depth + 1)
            out = []
            for field, values, line in sub:
                if line is None:
                    values = dict(values)
                    values[var] = _eval_poly_at(expr, values, field)
                    out.append((field, values, line))
                elif field is None and expr.degree_in(line["free"]) <= 0 and (
                        line["dep"] is None or expr.degree_in(line["dep"][0]) <= 0):
                    values = dict(values)
                    values[var] = _eval_poly_at(expr, values, field)
                    out.append((field, values, line))
                else:
                    ok = False
                    notes = notes + ["substituted variable depends on a free line parameter"]
            return out, ok, notes

    if len(var_list) == 1:
        z = var_list[0]
        dense = [upoly.to_integer(_dense_in_var(p, z, {}, None))[0] for p in polys]
        g = upoly.gcd_many_z(dense)
        if upoly.degree(g) == 0:
            return [], True, []
        sf = upoly.squarefree_part_q(g)
        roots = upoly.rational_roots(sf)
        rem = upoly.deflate_roots(sf, roots)
        out = [(None, {z: r}, None) for r in roots]
        if upoly.degree(rem) >= 1:
            K = certify_irreducible(upoly.monic_q(rem))
            out.append((K, {z: K.generator()}, None))
        return out, True, []

    # choose an elimination variable whose pairwise resultants do not all
    # degenerate (a shared factor hides solutions); rotate if needed
    chosen = None
    for rot in range(len(var_list)):
        order = var_list[rot:] + var_list[:rot]
        z = order[-1]
        withz = [p for p in polys if p.degree_in(z) > 0]
        rest = [p for p in polys if p.degree_in(z) <= 0]
        if not withz:
            continue
        eliminated = list(rest)
        got = False
        for i in range(len(withz)):
            for j in range(i + 1, len(withz)):
                r = _divide_out(resultant(withz[i], withz[j], z), assumptions)
                if not r.is_zero():
                    eliminated.append(r)
                    got = True
            if got and i + 1 >= _ELIM_PARTNERS:
                break
        if got or rest:
            chosen = (order, z, withz, rest, eliminated)
            break
    if chosen is None:
        return _shared_factor_split(polys, var_list, assumptions, depth)
    order, z, withz, rest, eliminated = chosen

    sub_assignments, complete, notes = _zero_dim_solve(eliminated, order[:-1],
                                                       assumptions, depth + 1)
    out = []
    queue = list(sub_assignments)
    while queue:
        field, values, line = queue.pop()
        if line is not None:
            # one-parameter candidate from the projection: fiber the original
            # system over the parametrized line and solve in (free, z)
            free = line["free"]
            if field is not None:
                complete = False
                notes = notes + ["parametrized component over an extension left unresolved"]
                continue
            sys2 = []
            for p in withz:
                q = _substitute_values(p, values)
                if line["dep"] is not None:
                    q = substitute_var(q, line["dep"][0], line["dep"][1])
                sys2.append(q)
            sub2, ok2, notes2 = _zero_dim_solve(sys2, [free, z], assumptions, depth + 1)
            complete = complete and ok2
            notes = notes + notes2
            for f2, vals2, line2 in sub2:
                if line2 is not None:
                    complete = False
                    notes = notes + ["nested parametrized component left unresolved"]
                    continue
                merged = dict(values)
                merged.update(vals2)
                if line["dep"] is not None:
                    merged[line["dep"][0]] = _eval_poly_at(line["dep"][1], merged, f2)
                out.append((f2, merged, None))
            continue
        try:
            fibers = [_dense_in_var(p, z, values, field) for p in withz]
            nonzero = [f for f in fibers if f]
            if not nonzero:
                if _partial_point_excluded(assumptions, z, values, field):
                    continue  # the whole z-line violates a nonzero assumption
                if field is None:
                    # every constraint vanishes along this z-line: hand the
                    # parametrized line to the caller for fibering
                    out.append((None, dict(values), {"free": z, "dep": None}))
                    continue
                complete = False
                notes = notes + [f"fiber over a partial point is unconstrained in u{z}"]
                continue
            if field is None:
                dense = [upoly.to_integer(f)[0] for f in nonzero]
                g = upoly.gcd_many_z(dense)
                if upoly.degree(g) == 0:
                    continue
                sf = upoly.squarefree_part_q(g)
                roots = upoly.rational_roots(sf)
                remf = upoly.deflate_roots(sf, roots)
                for r in roots:
                    nxt = dict(values)
                    nxt[z] = r
                    out.append((None, nxt, None))
                if upoly.degree(remf) >= 1:
                    K = certify_irreducible(upoly.monic_q(remf))
                    lifted = {k: K.element(v) for k, v in values.items()}
                    lifted[z] = K.generator()
                    out.append((K, lifted, None))
            else:
                g = nonzero[0]
                for other in nonzero[1:]:
                    g = fgcd_monic(field, g, other)
                    if len(g) == 1:
                        break
                if not g:
                    complete = False
                    notes = notes + ["fiber gcd vanished identically over an extension"]
                    continue
                if len(g) == 1:
                    continue
                if len(g) == 2:
                    nxt = dict(values)
                    nxt[z] = -g[0]
                    out.append((field, nxt, None))
                else:
                    complete = False
                    notes = notes + [
                        "fiber needs a tower of extensions (unresolved branch of degree "
                        f"{len(g) - 1})"]
        except ModulusSplit as split:
            g = upoly.monic_q(split.factor)
            f1 = certify_irreducible(g)
            f2 = certify_irreducible(upoly.divexact_q(list(field.modulus), g))
            for sub in (f1, f2):
                mapped = {k: sub.element(list(v.rep)) if isinstance(v, NumberFieldElem)
                          else sub.element(v) for k, v in values.items()}
                queue.append((sub, mapped, None))
    return out, complete, notes


def _substitute_values(p: MultiPoly, values: dict) -> MultiPoly:
    """Substitute rational values for the given variables (others untouched)."""
    for var, val in values.items():
        if p.degree_in(var) > 0:
            p = substitute_var(p, var, MultiPoly.constant(p.num_vars, Fraction(val)))
    return p


def _shared_factor_split(polys, var_list, assumptions, depth):
    """Fallback when every pairwise resultant vanishes: split off the common
    factor.  V(S) = V(G) union V(S/G); the cofactor system is solved
    recursively and V(G) becomes a parametrized line when G is linear."""
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.is_constant():
            break
    if g.is_constant():
        return [], False, ["resultant elimination degenerated (no common factor found)"]
    cof = []
    for p in polys:
        cof.append(p.divexact(g).primitive())
    assigns, ok, notes = _zero_dim_solve(cof, var_list, assumptions, depth + 1)
    lin = _linear_solve_entry(g)
    active_in_g = [v for v in var_list if g.degree_in(v) > 0]
    if len(var_list) == 2 and lin is not None and lin[0] in var_list:
        dep, expr = lin
        free = next(v for v in var_list if v != dep)
        assigns = list(assigns) + [(None, {}, {"free": free, "dep": (dep, expr)})]
        return assigns, ok, notes
    if len(var_list) == 2 and len(active_in_g) == 2:
        # split the (possibly nonlinear) shared curve through its roots in
        # one variable over the rational function view: handled only when a
        # linear solve exists; otherwise reported
        return list(assigns), False, notes + [
            f"shared factor of degree {g.total_degree()} not parametrizable"]
    return list(assigns), False, notes + [
        "shared factor component in 3 or more parameters left unresolved"]
def _chart_v_polys(chart: int, nv: int) -> list:
    vs = []
    for i in range(4):
        if i < chart:
            vs.append(MultiPoly.variable(nv, i))
        elif i == chart:
            vs.append(MultiPoly.constant(nv, 1))
        else:
            vs.append(MultiPoly.zero(nv))
    return vs


def _chart_rows(system: BilinearSystem, chart: int, nv: int) -> list:
    vps = _chart_v_polys(chart, nv)
    rows = []
    for brow in system.rows:
        L = brow.matrix
        if any(L[4][1 + j] != 0 for j in range(4)):
            raise TriplePlaneError("unexpected mu*beta coupling in a condition row")
        row = []
        for j in range(4):
            acc = MultiPoly.zero(nv)
            for i in range(4):
                if L[i][1 + j]:
                    acc = acc + L[i][1 + j] * vps[i]
            row.append(acc)
        row.append(MultiPoly.constant(nv, L[4][0]))  # mu column
        rhs = MultiPoly.zero(nv)
        for i in range(4):
            if L[i][0]:
                rhs = rhs - L[i][0] * vps[i]
        row.append(rhs)
        rows.append(row)
    return rows


def _eval_poly_at(p: MultiPoly, values: dict, field):
    zero = Fraction(0)
    vals = [values.get(i, zero) for i in range(p.num_vars)]
    v = p.evaluate(vals)
    if field is not None and not isinstance(v, NumberFieldElem):
        v = field.element(v)
    return v


def _solve_chart(system: BilinearSystem, chart: int):
    nv = max(chart, 1)
    rows = _chart_rows(system, chart, nv)
    leaves, overflow = _param_eliminate(rows, nv)
    solutions = []
    components = []
    complete = not overflow
    if overflow:
        components.append(f"chart v{chart}=1: branch cap exceeded")
    for leaf in leaves:
        solved_vars = {var for var, _ in leaf.substitutions}
        active = [k for k in range(chart) if k not in solved_vars]
        assigns, ok, notes = _zero_dim_solve(leaf.constraints, active, leaf.assumptions)
        complete = complete and ok
        for note in notes:
            components.append(f"chart v{chart}=1: {note}")
        for field, values, line in assigns:
            if line is not None:
                complete = False
                components.append(
                    f"chart v{chart}=1: unresolved one-parameter candidate component")
                continue
            queue = [(field, values)]
            while queue:
                fld, vals = queue.pop()
                try:
                    sol = _assemble_solution(system, chart, leaf, fld, vals)
                except ModulusSplit as split:
                    g = upoly.monic_q(split.factor)
                    for sub in (certify_irreducible(g),
                                certify_irreducible(upoly.divexact_q(list(fld.modulus), g))):
                        mapped = {k: sub.element(list(v.rep)) if isinstance(v, NumberFieldElem)
                                  else sub.element(v) for k, v in vals.items()}
                        queue.append((sub, mapped))
                    continue
                if sol is None:
                    continue
                if isinstance(sol, str):
                    components.append(f"chart v{chart}=1: {sol}")
                    continue
                solutions.append(sol)
    return solutions, components, complete


def _assemble_solution(system, chart, leaf, field, values):
    """Back-substitute one parameter point; returns ProjectionCenter, None
    (assumption violated / extraneous), or a component description string."""
    values = dict(values)
    # reconstruct substituted parameters in reverse order
    for var, expr in reversed(leaf.substitutions):
        values[var] = _eval_poly_at(expr, values, field)
    for e in leaf.assumptions:
        if not bool(_eval_poly_at(e, values, field)):
            return None
    one = Fraction(1) if field is None else field.one()
    zero = Fraction(0) if field is None else field.zero()
    w = [None] * 5
    for col, row6 in reversed(leaf.pivots):
        acc = _eval_poly_at(row6[5], values, field)
        for j in range(5):
            if j == col:
                continue
            cj = _eval_poly_at(row6[j], values, field)
            if not bool(cj):
                continue
            if w[j] is None:
                return (f"v-point admits a beta-family (unknown column {j} free "
                        f"in a pivot row)")
            acc = acc - cj * w[j]
        den = _eval_poly_at(row6[col], values, field)
        if not bool(den):
            return None  # pivot degenerated: the complementary branch covers this point
        w[col] = acc * (1 / den if field is None else den.inverse())
    if any(w[j] is None for j in range(5)):
        missing = [j for j in range(5) if w[j] is None]
        if all(j < 4 for j in missing):
            return f"beta components {missing} free at an isolated v-point"
        return "mu undetermined (degenerate leaf)"
    v = []
    for i in range(4):
        if i < chart:
            v.append(values.get(i, zero))
        elif i == chart:
            v.append(one)
        else:
            v.append(zero)
    if field is not None:
        v = [field.element(c) if not isinstance(c, NumberFieldElem) else c for c in v]
    beta = tuple(w[:4])
    mu = w[4]
    for brow in system.rows:
        if bool(brow.value(v, beta, mu)):
            return None
    lam = mu + sum((beta[j] * v[j] for j in range(4)), zero) + v[3]
    return ProjectionCenter(v=tuple(v), beta=beta, mu=mu, lam=lam, field=field)


def solve_projection_centers(system: BilinearSystem) -> SolutionSet:
    """Exhaustive chart-by-chart solve of the ten bilinear equations.

    Charts fix v3 = 1, then v3 = 0 & v2 = 1, and so on, partitioning
    projective v-space; every returned solution back-substitutes to zero in
    all ten rows.  Solutions with recovered lambda = 0 (degenerate family
    members, not projection centers) are listed separately.
    """
    centers = []
    lambda_zero = []
    components = []
    complete = True
    seen = set()
    for chart in (3, 2, 1, 0):
        sols, comps, ok = _solve_chart(system, chart)
        components.extend(comps)
        complete = complete and ok
        for sol in sols:
            key = _solution_key(sol)
            if key in seen:
                continue
            seen.add(key)
            if bool(sol.lam):
                centers.append(sol)
            else:
                lambda_zero.append(sol)
    centers.sort(key=ProjectionCenter.sort_key)
    lambda_zero.sort(key=ProjectionCenter.sort_key)
    return SolutionSet(centers=tuple(centers), lambda_zero=tuple(lambda_zero),
                       components=tuple(components), complete=complete)


def _solution_key(sol: ProjectionCenter):
    if sol.field is None:
        return ("Q", tuple(sol.v), tuple(sol.beta), sol.mu)
    return (tuple(sol.field.modulus),
            tuple(tuple(c.rep) for c in sol.v),
            tuple(tuple(c.rep) for c in sol.beta))
