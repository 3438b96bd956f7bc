import random

import pytest

from conftest import random_poly
from cusplab.parser import ParseError, parse_poly, print_poly, read_curve_file
from cusplab.poly import MultiPoly


class TestExamples:
    def test_conic(self):
        p = parse_poly("x0^2+x1^2-x2^2", 3)
        assert p.coefficient((2, 0, 0)) == 1
        assert p.coefficient((0, 0, 2)) == -1
        assert p.total_degree() == 2

    def test_cubic(self):
        p = parse_poly("x0^3+x0*x2^2-x1^2*x2", 3)
        assert p.coefficient((1, 0, 2)) == 1
        assert p.coefficient((0, 2, 1)) == -1

    def test_zero(self):
        assert parse_poly("0", 3).is_zero()
        assert print_poly(parse_poly("0")) == "0"

    def test_canonical_order(self):
        assert print_poly(parse_poly("x1+x0")) == "x0+x1"

    def test_reduced_rational(self):
        assert print_poly(parse_poly("2/4*x0")) == "1/2*x0"

    def test_aliases(self):
        assert parse_poly("x*y*z", 3) == parse_poly("x0*x1*x2", 3)
        assert parse_poly("w", 4) == MultiPoly.variable(4, 3)

    def test_parentheses_and_signs(self):
        p = parse_poly("-(x0-x1)^2+3", 2)
        q = -(parse_poly("x0-x1", 2) ** 2) + 3
        assert p == q


class TestErrors:
    def test_double_caret(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x0^^2")
        assert err.value.position == 3

    def test_exponent_cap(self):
        parse_poly("x0^64")
        with pytest.raises(ParseError):
            parse_poly("x0^65")

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("x0x1")
        with pytest.raises(ParseError):
            parse_poly("2x0")

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_poly("1/0")

    def test_unknown_variable(self):
        with pytest.raises(ParseError):
            parse_poly("q+1")

    def test_position_reported(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x0+*x1")
        assert err.value.position == 3

    def test_var_count_enforced(self):
        with pytest.raises(ParseError):
            parse_poly("x3", 3)


class TestRoundTrip:
    def test_fuzz_1000(self):
        rng = random.Random(123)
        for _ in range(1000):
            nv = rng.randint(1, 4)
            p = random_poly(rng, nv, rng.randint(0, 8), rng.randint(1, 6), -99, 99)
            # sprinkle rational coefficients
            if p.terms and rng.random() < 0.4:
                e = next(iter(p.terms))
                terms = dict(p.terms)
                terms[e] = terms[e] / rng.randint(2, 9)
                p = MultiPoly(nv, terms)
            text = print_poly(p)
            again = parse_poly(text, nv)
            assert again == p, text
            assert print_poly(again) == text

    def test_whitespace_ignored(self):
        assert parse_poly(" x0 + 2 * x1 ^ 2 ", 2) == parse_poly("x0+2*x1^2", 2)


class TestCurveFile:
    def test_read(self, tmp_path):
        path = tmp_path / "curves.txt"
        path.write_text("# the working conic and cubic\nx0^2+x1^2-x2^2\n\nx0^3+x0*x2^2-x1^2*x2  # cubic\n")
        polys = read_curve_file(str(path))
        assert len(polys) == 2
        assert polys[0] == parse_poly("x0^2+x1^2-x2^2", 3)

    def test_error_carries_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("x0^2\nx0^^3\n")
        with pytest.raises(ParseError) as err:
            read_curve_file(str(path))
        assert "bad.txt:2" in str(err.value)
