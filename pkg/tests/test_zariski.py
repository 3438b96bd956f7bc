import random
from fractions import Fraction

import pytest

from conftest import random_homogeneous
from cusplab.curves import PlaneCurve, SharedComponentError, transversal_intersection
from cusplab.parser import parse_poly
from cusplab.zariski import (ZariskiError, ZariskiInput, build_sextic,
                             gradient_identity_check, verify_six_cusps)


class TestBuild:
    def test_paper_curve_both_signs(self, paper_f2, paper_f3):
        plus = build_sextic(ZariskiInput(paper_f2, paper_f3, 1, 1))
        assert plus.f == paper_f3 ** 2 + paper_f2 ** 3
        minus = build_sextic(ZariskiInput(paper_f2, paper_f3, 1, -1))
        assert minus.f == paper_f3 ** 2 - paper_f2 ** 3
        assert plus.degree == minus.degree == 6

    def test_trivial_expansion(self):
        inp = ZariskiInput(parse_poly("x0^2", 3), parse_poly("x1^3", 3), 1, -1)
        assert build_sextic(inp).f == parse_poly("x1^6-x0^6", 3)

    def test_zero_coefficient_rejected(self, paper_f2, paper_f3):
        with pytest.raises(ZariskiError):
            ZariskiInput(paper_f2, paper_f3, 0, 1)

    def test_wrong_degrees_rejected(self, paper_f3):
        with pytest.raises(ZariskiError):
            ZariskiInput(paper_f3, paper_f3)


class TestGradientIdentity:
    def test_paper_input(self, paper_f2, paper_f3):
        assert gradient_identity_check(ZariskiInput(paper_f2, paper_f3, 1, -1))
        assert gradient_identity_check(ZariskiInput(paper_f2, paper_f3, 1, 1))

    def test_simple_input(self):
        assert gradient_identity_check(
            ZariskiInput(parse_poly("x0^2", 3), parse_poly("x1^3", 3), 1, -1))

    def test_random_inputs(self):
        rng = random.Random(31)
        done = 0
        while done < 25:
            f2 = random_homogeneous(rng, 3, 2)
            f3 = random_homogeneous(rng, 3, 3)
            if f2.is_zero() or f3.is_zero():
                continue
            a = Fraction(rng.randint(1, 5))
            b = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
            assert gradient_identity_check(ZariskiInput(f2, f3, a, b))
            done += 1


class TestVerifySixCusps:
    def test_paper_input_sum_form(self, paper_f2, paper_f3):
        rep = verify_six_cusps(ZariskiInput(paper_f2, paper_f3))
        assert rep.verified
        assert rep.conic_smooth and rep.cubic_smooth and rep.transverse
        assert rep.intersection_count == 6
        assert rep.scheme_matches_intersection
        assert rep.singularities.reduced
        assert rep.singularities.scheme_degree == 6
        assert rep.cusp_count == 6
        assert rep.all_cusps_on_conic
        assert rep.genus == 4
        assert rep.gradient_identity_ok

    def test_paper_difference_form_has_extra_node(self, paper_f2, paper_f3):
        # f3^2 - f2^3 for this input picks up a seventh singular point, a
        # node at [1:0:0] off the conic; the verification reports it
        rep = verify_six_cusps(ZariskiInput(paper_f2, paper_f3, 1, -1))
        assert not rep.verified
        assert rep.singularities.scheme_degree == 7
        tags = {t.tag for _, t in rep.singularities.rational_points}
        assert tags == {"Node"}
        pts = [pt.normalized().coords for pt, _ in rep.singularities.rational_points]
        assert (Fraction(1), Fraction(0), Fraction(0)) in pts

    def test_double_line_conic(self, paper_f3):
        rep = verify_six_cusps(ZariskiInput(parse_poly("x0^2", 3), paper_f3))
        assert not rep.conic_smooth
        assert not rep.verified
        assert any("conic" in p for p in rep.problems)

    def test_shared_component_rejected(self, paper_f2, paper_f3):
        with pytest.raises(ZariskiError):
            verify_six_cusps(ZariskiInput(paper_f2, parse_poly("x0", 3) * paper_f2))

    def test_weighted_scaling_same_curve(self, paper_f2, paper_f3):
        t = Fraction(3, 2)
        inp1 = ZariskiInput(paper_f2, paper_f3)
        inp2 = ZariskiInput(t ** 2 * paper_f2, t ** 3 * paper_f3)
        s1 = build_sextic(inp1).f
        s2 = build_sextic(inp2).f
        assert s2 == t ** 6 * s1
        rep1 = verify_six_cusps(inp1)
        rep2 = verify_six_cusps(inp2)
        assert rep1.verified and rep2.verified
        assert rep1.cusp_count == rep2.cusp_count == 6

    @pytest.mark.slow
    def test_random_transverse_pairs(self):
        # every smooth transverse pair yields six cusps on the conic
        rng = random.Random(37)
        done = 0
        while done < 20:
            f2 = random_homogeneous(rng, 3, 2, -5, 5)
            f3 = random_homogeneous(rng, 3, 3, -5, 5)
            if f2.is_zero() or f3.is_zero():
                continue
            try:
                transverse, _ = transversal_intersection(PlaneCurve(f2), PlaneCurve(f3))
            except (SharedComponentError, Exception):
                continue
            if not transverse:
                continue
            rep = verify_six_cusps(ZariskiInput(f2, f3))
            if not (rep.conic_smooth and rep.cubic_smooth):
                continue
            done += 1
            assert rep.verified, rep.problems
            assert rep.cusp_count == 6
            assert rep.all_cusps_on_conic
            assert rep.singularities.reduced
            assert rep.singularities.scheme_degree == 6
