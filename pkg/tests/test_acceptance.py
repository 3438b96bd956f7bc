"""Acceptance suite: one test per criterion, each printing a PASS line.

All arithmetic is exact; tolerances are zero.  Stated runtime budgets are
asserted.  Run with `pytest tests/test_acceptance.py -v -s` to see the
per-criterion lines.
"""

import json
import random
import time
from fractions import Fraction

from conftest import random_homogeneous, random_poly
from cusplab import numerology, oracle, versal
from cusplab.cli import main
from cusplab.curves import PlaneCurve, apply_shear, classify_at_point
from cusplab.numberfield import AlgebraicPoint
from cusplab.parser import parse_poly, print_poly
from cusplab.poly import MultiPoly, resultant
from cusplab.tripleplane import (build_condition_system, build_cubic_surface,
                                 cubic_space_independence, solve_projection_centers)

F2 = "x0^2+x1^2-x2^2"
F3 = "x0^3+x0*x2^2-x1^2*x2"


def report(num, name, elapsed, budget):
    print(f"ACCEPTANCE {num} PASS: {name} ({elapsed:.2f}s < {budget}s)")


def test_criterion_1_six_cusp_verification(capsys, paper_f2, paper_f3):
    start = time.time()
    code = main(["--json", "sextic-verify", "--f2", F2, "--f3", F3])
    out = json.loads(capsys.readouterr().out)
    elapsed = time.time() - start
    assert code == 0
    r = out["result"]
    assert r["conic_smooth"] is True
    assert r["cubic_smooth"] is True
    assert r["transverse"] is True and r["intersection_count"] == 6
    assert r["scheme_matches_intersection"] is True
    assert r["singular_scheme"]["reduced"] is True
    assert r["singular_scheme"]["scheme_degree"] == 6
    types = [pkg["type"] for pkg in r["singular_scheme"]["field_packets"]]
    counts = sum(pkg["point_count"] for pkg in r["singular_scheme"]["field_packets"])
    assert all(t["tag"] == "Cusp" for t in types) and counts == 6
    assert not r["singular_scheme"]["rational_points"]
    assert r["cusp_count"] == 6
    assert r["all_cusps_on_conic"] is True
    assert r["genus"] == 4
    assert elapsed < 10
    with capsys.disabled():
        report(1, "six cusps on a conic, scheme = V(f2,f3), genus 4", elapsed, 10)


def test_criterion_2_branch_locus_identity(paper_f2, paper_f3):
    start = time.time()
    s = build_cubic_surface(paper_f2, paper_f3, -3, 2)
    r = resultant(s.F3, s.F3.derivative(3), 3)
    target = 108 * (paper_f3 ** 2 - paper_f2 ** 3)
    assert MultiPoly(3, {e[:3]: c for e, c in r.terms.items()}) == target
    s2 = build_cubic_surface(paper_f2, paper_f3, 1, 1)
    r2 = resultant(s2.F3, s2.F3.derivative(3), 3)
    assert MultiPoly(3, {e[:3]: c for e, c in r2.terms.items()}) == \
        4 * paper_f2 ** 3 + 27 * paper_f3 ** 2
    rng = random.Random(2024)
    done = 0
    worst = 0.0
    while done < 20:
        t0 = time.time()
        f2 = random_homogeneous(rng, 3, 2, -9, 9)
        f3 = random_homogeneous(rng, 3, 3, -9, 9)
        if f2.is_zero() or f3.is_zero():
            continue
        s = build_cubic_surface(f2, f3, -3, 2)
        r = resultant(s.F3, s.F3.derivative(3), 3)
        assert MultiPoly(3, {e[:3]: c for e, c in r.terms.items()}) == \
            108 * (f3 ** 2 - f2 ** 3)
        done += 1
        worst = max(worst, time.time() - t0)
    elapsed = time.time() - start
    assert worst < 5
    report(2, "branch locus = 108(f3^2-f2^3) scaled / 4f2^3+27f3^2 unit, 20 randoms",
           elapsed, 5)


def test_criterion_3_system_reconstruction(paper_f2, paper_f3):
    start = time.time()
    expected = {
        "x0x3": "v0+v0*b3+3*v3*b0",
        "x1x3": "v1+v1*b3+3*v3*b1",
        "x2x3": "v2+v2*b3-3*v3*b2",
        "x0x1": "v0*b1+v1*b0",
        "x0x2": "v0*b2+v2-v2*b0",
        "x1x2": "-v1+v1*b2-v2*b1",
        "x1^2": "2*v1*b1-v2-mu",
        "x2^2": "-v0+2*v2*b2-mu",
        "x0^2": "3*v0+2*v0*b0-mu",
        "x3^2": "2*v3*b3-mu",
    }
    system = build_condition_system(paper_f2, paper_f3, "corollary")
    matches = sum(1 for row in system.rows if row.poly_string() == expected[row.key])
    assert matches == 10
    elapsed = time.time() - start
    report(3, "ten condition rows match the classical system 10/10", elapsed, 5)


def test_criterion_4_unique_projection_center(paper_f2, paper_f3):
    start = time.time()
    system = build_condition_system(paper_f2, paper_f3, "corollary")
    sol = solve_projection_centers(system)
    assert sol.complete is True
    assert sol.components == ()
    assert len(sol.centers) == 1
    assert sol.centers[0].v == (0, 0, 0, 1)
    assert sol.centers[0].beta == (0, 0, 0, 0)
    for p in (101, 103, 107):
        counts = oracle.count_solutions_mod_p(system, p)
        assert oracle.predicted_pair_counts(sol, p) == \
            (counts.pairs_lambda_nonzero, counts.pairs_lambda_zero)
        assert counts.pairs_lambda_nonzero == 1
    elapsed = time.time() - start
    assert elapsed < 60
    report(4, "unique center v=[0:0:0:1], beta=0; oracle agrees at 101/103/107",
           elapsed, 60)


def test_criterion_5_numerology_table():
    start = time.time()
    rep = numerology.moduli_report(numerology.CurveClass(6, 0, 6))
    assert (rep.moduli_upper_bound, rep.rho, rep.dim_moduli) == (7, 4, 9)
    assert rep.expected_severi_dim == 15
    assert numerology.moduli_report(numerology.CurveClass(6, 0, 9)).moduli_upper_bound == 1
    rep8 = numerology.moduli_report(numerology.CurveClass(6, 0, 8))
    assert rep8.moduli_upper_bound == 3 and rep8.rho - rep8.k == 0
    assert numerology.moduli_report(numerology.CurveClass(6, 0, 7)).moduli_upper_bound == 5
    elapsed = time.time() - start
    assert elapsed < 1
    report(5, "moduli bounds 7/1/3/5 and Severi dimension 15", elapsed, 1)


def test_criterion_6_plucker_duals():
    start = time.time()
    for src, dst in (((3, 0, 0), (6, 0, 9)), ((6, 0, 9), (3, 0, 0)),
                     ((2, 0, 0), (2, 0, 0))):
        c = numerology.CurveClass(*src)
        d = numerology.plucker_dual(c)
        assert (d.n_star, d.d_star, d.k_star) == dst
        assert numerology.CurveClass(d.n_star, d.d_star, d.k_star).genus() == c.genus()
    elapsed = time.time() - start
    assert elapsed < 1
    report(6, "Plucker duals (3,0,0)<->(6,0,9), conic self-dual, genus kept", elapsed, 1)


def test_criterion_7_versal_cusp_properties():
    start = time.time()
    rng = random.Random(77)
    done = 0
    while done < 100:
        b = [Fraction(rng.randint(1, 9) * rng.choice([-1, 1]))]
        b += [Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(0, 5))]
        a = [Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(0, 6))]
        limit, tangent = versal.arc_j_limit(versal.Arc(tuple(a), tuple(b)))
        assert limit.kind == "finite" and limit.value == 0
        assert tangent is False
        done += 1
    targets = [Fraction(0), Fraction(1728), Fraction(6912, 31)]
    while len(targets) < 10:
        targets.append(Fraction(rng.randint(-400, 400), rng.randint(1, 30)))
    for j0 in targets:
        limit, _ = versal.arc_j_limit(versal.find_arc_for_j(j0))
        assert limit.kind == "finite" and limit.value == j0
    done = 0
    while done < 50:
        a0 = Fraction(rng.randint(-9, 9))
        b0 = Fraction(rng.randint(-9, 9))
        t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        if 4 * a0 ** 3 + 27 * b0 ** 2 == 0:
            continue
        assert versal.j_invariant(versal.VersalPoint(a0, b0)) == \
            versal.j_invariant(versal.VersalPoint(t * t * a0, t ** 3 * b0))
        done += 1
    elapsed = time.time() - start
    assert elapsed < 5
    report(7, "100 non-tangent arcs reach j=0; 10 round trips; 50 scalings", elapsed, 5)


def test_criterion_8_kernel_property_suites():
    start = time.time()
    rng = random.Random(88)
    # resultants: symmetry, multiplicativity, specialization (100 pairs)
    from cusplab import upoly
    done = 0
    while done < 100:
        p = random_poly(rng, 2, 3, 4, -6, 6)
        q = random_poly(rng, 2, 3, 4, -6, 6)
        r = random_poly(rng, 2, 2, 3, -6, 6)
        if min(p.degree_in(0), q.degree_in(0), r.degree_in(0)) <= 0:
            continue
        done += 1
        sign = (-1) ** (p.degree_in(0) * q.degree_in(0))
        assert resultant(p, q, 0) == sign * resultant(q, p, 0)
        assert resultant(p * r, q, 0) == resultant(p, q, 0) * resultant(r, q, 0)
        x1val = Fraction(rng.randint(-4, 4))
        if p.coeffs_in(0)[-1].evaluate([0, x1val]) and q.coeffs_in(0)[-1].evaluate([0, x1val]):
            res_val = resultant(p, q, 0).evaluate([0, x1val])
            pd = [c.evaluate([0, x1val]) for c in p.coeffs_in(0)]
            qd = [c.evaluate([0, x1val]) for c in q.coeffs_in(0)]
            assert (res_val == 0) == (upoly.degree(upoly.gcd_q(pd, qd)) > 0)
    # Euler identity on 100 random homogeneous forms
    xs = [MultiPoly.variable(3, i) for i in range(3)]
    done = 0
    while done < 100:
        deg = rng.randint(1, 6)
        f = random_homogeneous(rng, 3, deg)
        if f.is_zero():
            continue
        done += 1
        acc = MultiPoly.zero(3)
        for i in range(3):
            acc = acc + xs[i] * f.derivative(i)
        assert acc == deg * f
    # parser round-trip on 1000 fuzzed polynomials
    for _ in range(1000):
        nv = rng.randint(1, 4)
        f = random_poly(rng, nv, rng.randint(0, 8), rng.randint(1, 6), -99, 99)
        assert parse_poly(print_poly(f), nv) == f
    # classification invariance under 20 projective coordinate changes
    cusp_curve = PlaneCurve(parse_poly("x0^3-x1^2*x2", 3))
    done = 0
    while done < 20:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det == 0:
            continue
        done += 1
        sheared = PlaneCurve(apply_shear(cusp_curve.f, tuple(tuple(r) for r in m)))
        inv = [[(m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                 - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]) / det
                for j in range(3)] for i in range(3)]
        q = tuple(inv[i][2] for i in range(3))  # A^-1 [0:0:1]
        assert classify_at_point(sheared, AlgebraicPoint(None, q)).tag == "Cusp"
    elapsed = time.time() - start
    assert elapsed < 60
    report(8, "resultant/Euler/parser/classification property suites", elapsed, 60)


def test_criterion_9_cubic_space_rank(paper_f2, paper_f3):
    start = time.time()
    s = build_cubic_surface(paper_f2, paper_f3, 1, 1)
    rank, labels = cubic_space_independence(s)
    assert rank == 5
    elapsed = time.time() - start
    report(9, "5x20 coefficient matrix of {F3, x_i*Q} has rank 5", elapsed, 5)
