import random
from fractions import Fraction

import pytest

from cusplab.parser import parse_poly
from cusplab.poly import MultiPoly


@pytest.fixture(scope="session")
def paper_f2():
    return parse_poly("x0^2+x1^2-x2^2", 3)


@pytest.fixture(scope="session")
def paper_f3():
    return parse_poly("x0^3+x0*x2^2-x1^2*x2", 3)


def random_poly(rng: random.Random, num_vars: int, max_deg: int, n_terms: int,
                lo: int = -9, hi: int = 9) -> MultiPoly:
    terms = {}
    for _ in range(n_terms):
        e = tuple(rng.randint(0, max_deg) for _ in range(num_vars))
        c = terms.get(e, Fraction(0)) + rng.randint(lo, hi)
        terms[e] = c
    return MultiPoly(num_vars, {e: c for e, c in terms.items() if c})


def random_homogeneous(rng: random.Random, num_vars: int, deg: int,
                       lo: int = -9, hi: int = 9) -> MultiPoly:
    import itertools
    terms = {}
    for e in itertools.product(range(deg + 1), repeat=num_vars):
        if sum(e) == deg:
            c = rng.randint(lo, hi)
            if c:
                terms[e] = Fraction(c)
    return MultiPoly(num_vars, terms)
