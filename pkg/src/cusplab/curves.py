"""Singular schemes and singularity types of projective plane curves.

The pipeline is classical elimination: apply a recorded generic rational
shear, pass to the affine chart x2 = 1, eliminate through pairwise
resultants of the partial derivatives, and read the singular points off the
squarefree eliminant.  Rational eliminant roots are lifted to explicit
points through Hensel lifting; the remaining factors are packaged as
number-field data and handled with gcds over the quotient ring, splitting
the modulus on demand when it turns out to be reducible.

Classification at a point follows the local expansion: a nonzero gradient is
smooth, a rank-2 quadratic part is a node (A1), a rank-1 quadratic part
whose tangent line misses the cubic part is an ordinary cusp (A2), and
anything else is reported as Other with its multiplicity and quadratic rank.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .numberfield import (AlgebraicPoint, ModulusSplit, NumberField, NumberFieldElem,
                          certify_irreducible, field_dense, fgcd_monic)
from .poly import MultiPoly, poly_from_coeffs, resultant

MAX_SHEAR_TRIES = 8


class CurveError(ValueError):
    pass


class NonReducedCurveError(CurveError):
    pass


class SharedComponentError(CurveError):
    pass


class AmbiguousClassificationError(CurveError):
    """Residue branches of a reducible point field disagree on the type."""


@dataclass(frozen=True)
class PlaneCurve:
    f: MultiPoly

    def __post_init__(self):
        if self.f.num_vars != 3:
            raise CurveError("plane curves need exactly 3 variables")
        if self.f.is_zero() or not self.f.is_homogeneous():
            raise CurveError("curve polynomial must be homogeneous and nonzero")
        if self.f.total_degree() < 1:
            raise CurveError("curve degree must be at least 1")

    @property
    def degree(self) -> int:
        return self.f.total_degree()


@dataclass(frozen=True)
class SingularityType:
    tag: str  # "Smooth" | "Node" | "Cusp" | "Other"
    multiplicity: int | None = None
    quad_rank: int | None = None

    def __repr__(self):
        if self.tag == "Other":
            return f"Other(mult={self.multiplicity}, quad_rank={self.quad_rank})"
        return self.tag


SMOOTH = SingularityType("Smooth")
NODE = SingularityType("Node", multiplicity=2, quad_rank=2)
CUSP = SingularityType("Cusp", multiplicity=2, quad_rank=1)


@dataclass(frozen=True)
class FieldPointPackage:
    """A Galois packet of singular points sharing one eliminant factor.

    `field` is Q[t]/(factor); the packet stands for `field.degree` conjugate
    points whose (un-sheared) projective coordinates are the given elements.
    """

    field: NumberField
    coords: tuple
    eliminant_factor: MultiPoly
    classification: SingularityType | str  # SingularityType or "unclassified"

    @property
    def point_count(self) -> int:
        return self.field.degree

    def point(self) -> AlgebraicPoint:
        return AlgebraicPoint(self.field, self.coords)


@dataclass(frozen=True)
class SingularityReport:
    scheme_degree: int
    reduced: bool
    rational_points: tuple
    field_points: tuple
    shear_used: tuple
    eliminant: MultiPoly  # squarefree, primitive, in the sheared x-coordinate

    @property
    def is_empty(self) -> bool:
        return self.scheme_degree == 0

    def total_points(self) -> int:
        return len(self.rational_points) + sum(p.point_count for p in self.field_points)

    def all_types(self) -> list:
        types = [t for _, t in self.rational_points]
        types += [p.classification for p in self.field_points]
        return types


# -- shears ----------------------------------------------------------------------


def _seed_material(*polys: MultiPoly, seed: int = 0) -> int:
    h = hashlib.sha256()
    for p in polys:
        h.update(str(p).encode())
    h.update(str(seed).encode())
    return int.from_bytes(h.digest()[:8], "big")


def shear_sequence(material: int):
    """Deterministic unimodular 3x3 integer shears; identity first.

    Generic position needs dense matrices (curves like x0*x1*x2 reject any
    shear with a zero in the second column), so enough elementary operations
    are composed to fill every entry with high probability."""
    yield ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    rng = random.Random(material)
    while True:
        m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        for _ in range(7):
            i, j = rng.sample(range(3), 2)
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            for k in range(3):
                m[i][k] += c * m[j][k]
        yield tuple(tuple(r) for r in m)


def apply_shear(p: MultiPoly, shear) -> MultiPoly:
    """(p o A)(x) = p(A x)."""
    xs = [MultiPoly.variable(3, j) for j in range(3)]
    rows = []
    for i in range(3):
        acc = MultiPoly.zero(3)
        for j in range(3):
            if shear[i][j]:
                acc = acc + shear[i][j] * xs[j]
        rows.append(acc)
    return p.substitute(rows)


def invert_shear(shear) -> tuple:
    """Exact inverse of a unimodular integer matrix (as Fractions)."""
    a = [[Fraction(shear[i][j]) for j in range(3)] for i in range(3)]
    det = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    if det == 0:
        raise CurveError("singular shear")
    cof = [[(a[(j + 1) % 3][(i + 1) % 3] * a[(j + 2) % 3][(i + 2) % 3]
             - a[(j + 1) % 3][(i + 2) % 3] * a[(j + 2) % 3][(i + 1) % 3]) / det
            for j in range(3)] for i in range(3)]
    return tuple(tuple(row) for row in cof)


def _dehomogenize(p: MultiPoly) -> MultiPoly:
    """Set x2 = 1 (stay in the 3-variable ring, x2-exponents dropped)."""
    terms: dict = {}
    for e, c in p.terms.items():
        key = (e[0], e[1], 0)
        terms[key] = terms.get(key, Fraction(0)) + c
    return MultiPoly(3, terms)


def _restrict_to_infinity(p: MultiPoly) -> list:
    """p(x0, x1, 0) as a dense list in x0 with x1 = 1 (binary form view)."""
    d = p.total_degree()
    out = [Fraction(0)] * (d + 1)
    for e, c in p.terms.items():
        if e[2] == 0:
            out[e[0]] += c
    return upoly.strip(out)


def _common_zero_at_infinity(gens: list) -> bool:
    """Do the generators share a projective zero on the line x2 = 0?"""
    restrictions = [_restrict_to_infinity(g) for g in gens if not g.is_zero()]
    nonzero = [r for r in restrictions if r]
    if len(nonzero) < len(restrictions):
        return True  # a generator vanishes on the whole line
    g = upoly.gcd_many_z([upoly.to_integer(r)[0] for r in nonzero])
    if not g or upoly.degree(g) > 0:
        return True
    # remaining spot [1:0:0]: x1 = 0, i.e. the full-degree x0 coefficient
    at_100 = all(gpoly.coefficient((gpoly.total_degree(), 0, 0)) == 0
                 for gpoly in gens if not gpoly.is_zero())
    return at_100


# -- the singular scheme -----------------------------------------------------------


def singular_scheme(curve: PlaneCurve, seed: int = 0, classify: bool = True) -> SingularityReport:
    """Compute and (optionally) classify the singular points of a reduced curve."""
    f = curve.f
    gradient = [f.derivative(i) for i in range(3)]
    material = _seed_material(f, seed=seed)
    last_error = None
    for attempt, shear in enumerate(shear_sequence(material)):
        if attempt >= MAX_SHEAR_TRIES:
            break
        try:
            return _singular_scheme_with_shear(curve, gradient, shear, classify)
        except _RetryShear as exc:
            last_error = exc
            continue
    raise CurveError(f"no usable shear found after {MAX_SHEAR_TRIES} attempts: {last_error}")


class _RetryShear(Exception):
    pass


def _singular_scheme_with_shear(curve, gradient, shear, classify) -> SingularityReport:
    f = curve.f
    n = curve.degree
    fA = apply_shear(f, shear)
    # leading coefficient in x1 must be a nonzero constant so that the chart
    # x2 = 1 sees every intersection of the polars at finite y
    if fA.coefficient((0, n, 0)) == 0:
        raise _RetryShear("leading x1-coefficient vanished")
    aff = _dehomogenize(fA)
    # reducedness: with constant x1-leading coefficient, a repeated component
    # forces Res_y(f, f_y) to vanish identically
    if n >= 2:
        disc = resultant(aff, aff.derivative(1), 1)
        if disc.is_zero():
            raise NonReducedCurveError("non-reduced curve")
    gens_proj = [fA.derivative(i) for i in range(3)]
    if _common_zero_at_infinity(gens_proj + [fA]):
        raise _RetryShear("singular point on the line at infinity")

    gens = [g for g in (_dehomogenize(g) for g in gens_proj) if not g.is_zero()]
    fiber_gens = gens + [aff]

    # x-eliminant: gcd of the pairwise resultants of the polars
    res_list = []
    direct = []
    with_y = [g for g in gens if g.degree_in(1) > 0]
    without_y = [g for g in gens if g.degree_in(1) <= 0]
    for i in range(len(with_y)):
        for j in range(i + 1, len(with_y)):
            res_list.append(resultant(with_y[i], with_y[j], 1))
    for g in without_y:
        direct.append(g)
    dense_inputs = []
    for r in res_list + direct:
        if r.is_zero():
            continue
        dense = [Fraction(0)] * (r.degree_in(0) + 1)
        for e, c in r.terms.items():
            dense[e[0]] += c
        dense_inputs.append(upoly.to_integer(dense)[0])
    if not dense_inputs:
        # every pairwise resultant vanished identically: polars share a curve
        raise _RetryShear("degenerate elimination")
    gcd_elim = upoly.gcd_many_z(dense_inputs)
    if upoly.degree(gcd_elim) == 0:
        empty = poly_from_coeffs([1])
        return SingularityReport(0, True, (), (), shear, empty)

    sf = upoly.squarefree_part_q(gcd_elim)
    rational = upoly.rational_roots(sf)
    remainder = upoly.deflate_roots(sf, rational)

    rational_points: list = []
    field_pkg_list: list = []
    reduced = True
    scheme_degree = 0

    for r in rational:
        points, packages, fiber_sf = _lift_rational_fiber(fiber_gens, r, shear)
        if not points and not packages:
            continue  # extraneous eliminant root
        reduced = reduced and fiber_sf
        for coords in points:
            scheme_degree += 1
            pt = AlgebraicPoint(None, coords)
            cls = classify_at_point(curve, pt) if classify else "unclassified"
            rational_points.append((pt, cls))
        for pkg in packages:
            scheme_degree += pkg.point_count
            if classify:
                pkg = _classify_package(curve, pkg)
            field_pkg_list.append(pkg)

    # non-rational part of the eliminant, split on demand
    pending = [remainder] if upoly.degree(remainder) >= 1 else []
    while pending:
        fac = upoly.monic_q(pending.pop())
        K = certify_irreducible(fac)
        try:
            pkgs = _lift_field_fiber(fiber_gens, K, shear)
        except ModulusSplit as split:
            pending.append(split.factor)
            pending.append(upoly.divexact_q(fac, upoly.monic_q(split.factor)))
            continue
        if pkgs is None:
            raise _RetryShear("conjugate points share a sheared x-coordinate")
        for pkg in pkgs:
            scheme_degree += pkg.point_count
            if classify:
                pkg = _classify_package(curve, pkg)
            field_pkg_list.append(pkg)

    eliminant = poly_from_coeffs(sf)
    return SingularityReport(
        scheme_degree=scheme_degree,
        reduced=reduced,
        rational_points=tuple(rational_points),
        field_points=tuple(field_pkg_list),
        shear_used=shear,
        eliminant=eliminant,
    )


def _dense_in_y(p: MultiPoly, x_value: Fraction) -> list:
    """Specialize x0 = x_value, x2 = 1 in an affine polynomial: dense list in x1."""
    out = [Fraction(0)] * (p.degree_in(1) + 1)
    for e, c in p.terms.items():
        out[e[1]] += c * x_value ** e[0]
    return upoly.strip(out)


def _lift_rational_fiber(fiber_gens: list, r: Fraction, shear):
    """Points above a rational eliminant root.

    Returns (rational point coord-tuples, field packages for irrational fiber
    roots, fiber-squarefree flag)."""
    fibers = [_dense_in_y(g, r) for g in fiber_gens]
    nonzero = [f for f in fibers if f]
    if len(nonzero) < len(fibers) and not nonzero:
        return [], [], True
    g = upoly.gcd_many_z([upoly.to_integer(f)[0] for f in nonzero])
    if not g or upoly.degree(g) == 0:
        return [], [], True  # extraneous
    fiber_sf = upoly.is_squarefree_q(g)
    g_red = upoly.squarefree_part_q(g)
    yroots = upoly.rational_roots(g_red)
    rest = upoly.deflate_roots(g_red, yroots)
    points = [_unshear_rational(shear, (r, y)) for y in yroots]
    packages = []
    if upoly.degree(rest) >= 1:
        K = certify_irreducible(upoly.monic_q(rest))
        eta = K.generator()
        coords = _unshear_field(shear, K, K.element(r), eta)
        packages.append(FieldPointPackage(K, coords, K.modulus_poly(), "unclassified"))
    return points, packages, fiber_sf


def _lift_field_fiber(fiber_gens: list, K: NumberField, shear):
    """Points above one irrational eliminant factor; None asks for a new shear.

    May raise ModulusSplit when the factor turns out reducible under the
    fiber gcd computation."""
    xi = K.generator()
    values = [xi, K.zero(), K.one()]
    fibers = [field_dense(K, g, 1, values) for g in fiber_gens]
    nonzero = [f for f in fibers if f]
    if not nonzero:
        return None
    g = nonzero[0]
    for other in nonzero[1:]:
        g = fgcd_monic(K, g, other)
        if len(g) == 1:
            return []  # extraneous factor: no common fiber root
    if not g:
        return []
    if len(g) == 2:  # linear: unique point, coordinates in K
        eta = -g[0]  # monic: y + g0
        coords = _unshear_field(shear, K, xi, eta)
        return [FieldPointPackage(K, coords, K.modulus_poly(), "unclassified")]
    return None  # several conjugate points share this x: need another shear


def _unshear_rational(shear, xy: tuple) -> tuple:
    x, y = xy
    vec = (Fraction(x), Fraction(y), Fraction(1))
    out = [sum(Fraction(shear[i][j]) * vec[j] for j in range(3)) for i in range(3)]
    scale = next(v for v in reversed(out) if v)
    return tuple(v / scale for v in out)


def _unshear_field(shear, K: NumberField, xi, eta) -> tuple:
    vec = (xi, eta, K.one())
    out = []
    for i in range(3):
        acc = K.zero()
        for j in range(3):
            if shear[i][j]:
                acc = acc + shear[i][j] * vec[j]
        out.append(acc)
    return tuple(out)


# -- classification -----------------------------------------------------------------


def classify_at_point(curve: PlaneCurve, point: AlgebraicPoint) -> SingularityType:
    """Classify the curve at one exact point (which must lie on the curve).

    Over a reducible (unverified) point field the classification is run on
    every residue branch; agreement is required, disagreement raises
    AmbiguousClassificationError.
    """
    results = _classify_with_splits(curve, point.field, tuple(point.coords))
    tags = {(t.tag, t.multiplicity, t.quad_rank) for t in results}
    if len(tags) > 1:
        raise AmbiguousClassificationError(
            f"point field branches disagree: {sorted(tags)}")
    return results[0]


def _classify_with_splits(curve, field, coords) -> list:
    try:
        return [_classify_impl(curve, field, coords)]
    except ModulusSplit as split:
        g = upoly.monic_q(split.factor)
        sub1 = certify_irreducible(g)
        sub2 = certify_irreducible(upoly.divexact_q(list(field.modulus), g))
        out = []
        for sub in (sub1, sub2):
            mapped = tuple(sub.element(list(c.rep)) for c in coords)
            out.extend(_classify_with_splits(curve, sub, mapped))
        return out


def _classify_impl(curve: PlaneCurve, field, coords) -> SingularityType:
    f = curve.f
    if field is None:
        vals = [Fraction(c) for c in coords]
        one = Fraction(1)
    else:
        vals = [field.element(c) if not isinstance(c, NumberFieldElem) else c for c in coords]
        one = field.one()
    if all(not bool(v) for v in vals):
        raise CurveError("all point coordinates are zero")
    if bool(f.evaluate(vals)):
        raise CurveError("point does not lie on the curve")
    # chart: last coordinate with an invertible value
    chart = max(i for i, v in enumerate(vals) if bool(v))
    inv = (1 / vals[chart]) if field is None else vals[chart].inverse()
    vals = [v * inv for v in vals]
    locals_ = [i for i in range(3) if i != chart]

    # local homogeneous parts of f(p + t u) in the chart coordinates
    parts = _local_parts(f, vals, chart, locals_, field)

    grad = parts.get(1, {})
    if any(bool(c) for c in grad.values()):
        return SMOOTH
    quad = parts.get(2, {})
    A = quad.get((2, 0), _zero(field))
    B = quad.get((1, 1), _zero(field))
    C = quad.get((0, 2), _zero(field))
    disc = B * B - 4 * A * C
    if bool(disc):
        return NODE
    if bool(A) or bool(C):
        # rank 1: tangent direction d with l(d) = 0
        if bool(A):
            d = (-B, 2 * A)
        else:
            d = (one, _zero(field))
        cubic = parts.get(3, {})
        c30 = cubic.get((3, 0), _zero(field))
        c21 = cubic.get((2, 1), _zero(field))
        c12 = cubic.get((1, 2), _zero(field))
        c03 = cubic.get((0, 3), _zero(field))
        val = (c30 * d[0] * d[0] * d[0] + c21 * d[0] * d[0] * d[1]
               + c12 * d[0] * d[1] * d[1] + c03 * d[1] * d[1] * d[1])
        if bool(val):
            return CUSP
        return SingularityType("Other", multiplicity=2, quad_rank=1)
    # quadratic part vanishes entirely: multiplicity >= 3
    mult = next((m for m in sorted(parts) if m >= 3 and any(bool(c) for c in parts[m].values())),
                curve.degree)
    return SingularityType("Other", multiplicity=mult, quad_rank=0)


def _zero(field):
    return Fraction(0) if field is None else field.zero()


def _local_parts(f: MultiPoly, vals, chart, locals_, field) -> dict:
    """Homogeneous parts of the local expansion of f at the (normalized) point.

    Substitutes x_chart = 1 and x_{locals_[k]} = p_k + u_k, collecting
    {degree: {(i, j): coeff}} in the local coordinates (u_0, u_1).
    """
    p0, p1 = vals[locals_[0]], vals[locals_[1]]
    one = Fraction(1) if field is None else field.one()
    # binomial expansions of (p + u)^e, cached per exponent
    pow0 = {0: [one]}
    pow1 = {0: [one]}

    def expand(cache, base, e):
        if e not in cache:
            prev = expand(cache, base, e - 1)
            nxt = [_zero(field)] * (e + 1)
            for i, c in enumerate(prev):
                nxt[i] = nxt[i] + c * base
                nxt[i + 1] = nxt[i + 1] + c
            cache[e] = nxt
        return cache[e]

    parts: dict = {}
    for e, c in f.terms.items():
        e0, e1 = e[locals_[0]], e[locals_[1]]
        c0s = expand(pow0, p0, e0)
        c1s = expand(pow1, p1, e1)
        for i, a in enumerate(c0s):
            if not bool(a):
                continue
            for j, b in enumerate(c1s):
                if not bool(b):
                    continue
                deg = i + j
                bucket = parts.setdefault(deg, {})
                key = (i, j)
                bucket[key] = bucket.get(key, _zero(field)) + c * a * b
    return parts


def _classify_package(curve: PlaneCurve, pkg: FieldPointPackage):
    """Classify a field packet; splits refine the packet into sub-packets."""
    try:
        cls = classify_at_point(curve, pkg.point())
        return FieldPointPackage(pkg.field, pkg.coords, pkg.eliminant_factor, cls)
    except AmbiguousClassificationError:
        return FieldPointPackage(pkg.field, pkg.coords, pkg.eliminant_factor, "unclassified")


# -- intersections and smoothness ------------------------------------------------------


def curves_share_component(p: PlaneCurve, q: PlaneCurve) -> bool:
    """Resultant test: a shared component kills Res over some variable."""
    for var in range(3):
        if p.f.degree_in(var) > 0 and q.f.degree_in(var) > 0:
            if resultant(p.f, q.f, var).is_zero():
                return True
    return False


def transversal_intersection(p: PlaneCurve, q: PlaneCurve, seed: int = 0) -> tuple:
    """(transverse, distinct point count) for curves without common components.

    Transversality criterion: after a recorded generic shear, the elimination
    resultant in the chart x2 = 1 is squarefree of full Bezout degree.
    """
    if curves_share_component(p, q):
        raise SharedComponentError("curves share a component")
    m, n = p.degree, q.degree
    material = _seed_material(p.f, q.f, seed=seed)
    best = None
    for attempt, shear in enumerate(shear_sequence(material)):
        if attempt >= MAX_SHEAR_TRIES:
            break
        pA, qA = apply_shear(p.f, shear), apply_shear(q.f, shear)
        if pA.coefficient((0, m, 0)) == 0 or qA.coefficient((0, n, 0)) == 0:
            continue
        if _common_zero_at_infinity([pA, qA]):
            continue
        r = resultant(_dehomogenize(pA), _dehomogenize(qA), 1)
        dense = [Fraction(0)] * (r.degree_in(0) + 1)
        for e, c in r.terms.items():
            dense[e[0]] += c
        dense = upoly.strip(dense)
        if not dense:
            raise SharedComponentError("curves share a component")
        deg = upoly.degree(dense)
        sf = upoly.squarefree_part_q(dense)
        if deg == m * n and upoly.degree(sf) == deg:
            # a squarefree full-degree eliminant proves transversality outright
            return True, deg
        # an unlucky shear can merge distinct x-coordinates: remember the best
        # separation seen and keep trying before concluding non-transversality
        if best is None or upoly.degree(sf) > best[1]:
            best = (False, upoly.degree(sf))
    if best is not None:
        return best
    raise CurveError(f"no usable shear found after {MAX_SHEAR_TRIES} attempts")


def is_smooth(curve: PlaneCurve, seed: int = 0) -> bool:
    """True iff the singular scheme is empty (curve must be reduced)."""
    return singular_scheme(curve, seed=seed, classify=False).is_empty


def curve_is_reduced(curve: PlaneCurve, seed: int = 0) -> bool:
    """Squarefreeness of the defining form, by the sheared-discriminant test."""
    f = curve.f
    n = curve.degree
    if n == 1:
        return True
    material = _seed_material(f, seed=seed)
    for attempt, shear in enumerate(shear_sequence(material)):
        if attempt >= MAX_SHEAR_TRIES:
            break
        fA = apply_shear(f, shear)
        if fA.coefficient((0, n, 0)) == 0:
            continue
        aff = _dehomogenize(fA)
        return not resultant(aff, aff.derivative(1), 1).is_zero()
    raise CurveError(f"no usable shear found after {MAX_SHEAR_TRIES} attempts")
