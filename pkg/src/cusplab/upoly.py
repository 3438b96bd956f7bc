"""Dense univariate polynomial machinery over Z, Q and F_p.

Polynomials are little-endian coefficient lists (index = power).  Integer
lists carry Python ints; rational lists carry Fractions (or ints).  These
helpers back the eliminant pipeline: gcds through the integer subresultant
PRS, squarefree parts, and exact rational-root extraction by Hensel lifting
plus rational reconstruction, so no divisor enumeration of huge integers is
ever needed.
"""

from __future__ import annotations

import math
from fractions import Fraction

# small primes used for modular certificates and root lifting
CERT_PRIMES = [p for p in range(2, 100) if all(p % q for q in range(2, p))]
LIFT_PRIMES = [10007, 10009, 10037, 10039, 10061, 10067, 10079, 10091, 10093, 10099]


def strip(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: list) -> int:
    return len(a) - 1


def is_zero(a: list) -> bool:
    return not a


def add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    return strip(out)


def neg(a: list) -> list:
    return [-c for c in a]


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return strip(out)


def scale(a: list, c) -> list:
    if not c:
        return []
    return [x * c for x in a]


def deriv(a: list) -> list:
    return strip([a[i] * i for i in range(1, len(a))])


def eval_at(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def to_integer(a: list) -> tuple:
    """Clear denominators and content: returns (primitive int list, scale) with
    a = scale * primitive and the primitive leading coefficient positive."""
    a = strip(list(a))
    if not a:
        return [], Fraction(0)
    den = 1
    for c in a:
        f = Fraction(c)
        den = den * f.denominator // math.gcd(den, f.denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints], Fraction(g, den)


def content_z(a: list) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, abs(c))
    return g


def primitive_z(a: list) -> list:
    a = strip(list(a))
    if not a:
        return []
    g = content_z(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def pseudo_rem_z(a: list, b: list) -> list:
    """prem over Z: lc(b)^(deg a - deg b + 1) * a mod b."""
    da, db = degree(a), degree(b)
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        r = [c * lb for c in r]
        if top:
            for i, bc in enumerate(b):
                r[i + k] -= top * bc
        r[db + k] = 0
    return strip(r)


def gcd_z(a: list, b: list) -> list:
    """Primitive gcd over Z via the primitive PRS (positive leading coefficient)."""
    a = primitive_z(a)
    b = primitive_z(b)
    if not a:
        return b
    if not b:
        return a
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = pseudo_rem_z(a, b)
        a, b = b, primitive_z(r)
    return primitive_z(a)


def gcd_many_z(polys: list) -> list:
    g: list = []
    for p in polys:
        g = gcd_z(g, p)
        if g and degree(g) == 0:
            return [1]
    return g


def divexact_q(a: list, b: list) -> list:
    """Exact division over Q; raises if the remainder is nonzero."""
    a = [Fraction(c) for c in strip(list(a))]
    b = [Fraction(c) for c in strip(list(b))]
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = a
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        strip(r)
    if r:
        raise ArithmeticError("inexact univariate division")
    return strip(q)


def gcd_q(a: list, b: list) -> list:
    """gcd over Q, returned as a primitive integer list with positive lead."""
    az, _ = to_integer(a)
    bz, _ = to_integer(b)
    return gcd_z(az, bz)


def squarefree_part_q(a: list) -> list:
    """a / gcd(a, a'), primitive integer coefficients, positive lead."""
    az, _ = to_integer(a)
    if not az:
        raise ZeroDivisionError("squarefree part of the zero polynomial")
    if degree(az) == 0:
        return [1]
    g = gcd_z(az, deriv(az))
    sf = divexact_q(az, g)
    sfz, _ = to_integer(sf)
    return sfz


def is_squarefree_q(a: list) -> bool:
    az, _ = to_integer(a)
    if not az:
        return False
    if degree(az) == 0:
        return True
    return degree(gcd_z(az, deriv(az))) == 0


def monic_q(a: list) -> list:
    a = strip([Fraction(c) for c in a])
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


# -- arithmetic over F_p -----------------------------------------------------


def mod_p(a: list, p: int) -> list:
    """Reduce a rational/integer list mod p; denominators must be prime to p."""
    out = []
    for c in a:
        f = Fraction(c)
        if f.denominator % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        out.append(f.numerator * pow(f.denominator, -1, p) % p)
    return strip(out)


def mul_p(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return strip(out)


def rem_p(a: list, b: list, p: int) -> list:
    a = strip([c % p for c in a])
    b = strip([c % p for c in b])
    inv = pow(b[-1], -1, p)
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] * inv % p
        for i, bc in enumerate(b):
            a[i + k] = (a[i + k] - c * bc) % p
        strip(a)
    return a


def gcd_p(a: list, b: list, p: int) -> list:
    a = strip([c % p for c in a])
    b = strip([c % p for c in b])
    while b:
        a, b = b, rem_p(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def powmod_p(base: list, e: int, f: list, p: int) -> list:
    result = [1]
    base = rem_p(base, f, p)
    while e:
        if e & 1:
            result = rem_p(mul_p(result, base, p), f, p)
        base = rem_p(mul_p(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible_p(f: list, p: int) -> bool:
    """Irreducibility over F_p via the distinct-degree criterion."""
    f = strip([c % p for c in f])
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if degree(gcd_p(f, deriv(f), p)) != 0:
        return False
    x = [0, 1]
    # x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for prime q | n
    h = powmod_p(x, p ** n, f, p)
    if strip(add(h, neg(x))):
        return False
    for q in {d for d in range(2, n + 1) if n % d == 0 and all(d % r for r in range(2, d))}:
        h = powmod_p(x, p ** (n // q), f, p)
        if degree(gcd_p(add(h, neg(x)), f, p)) != 0:
            return False
    return True


def roots_p(f: list, p: int) -> list:
    """All roots of f in F_p (brute scan; intended for p up to ~20000)."""
    f = strip([c % p for c in f])
    if not f:
        raise ZeroDivisionError("root scan of the zero polynomial")
    return [r for r in range(p) if eval_at(f, r) % p == 0]


# -- rational roots through Hensel lifting -------------------------------------


def _rational_reconstruct(r: int, m: int) -> tuple | None:
    """Find s/t = r (mod m) with |s|, t <= sqrt(m/2); None if impossible."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, r % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or math.gcd(r1, s1) != 1:
        return None
    if s1 < 0:
        return -r1, -s1
    return r1, s1


def rational_roots(a: list) -> list:
    """All rational roots of a nonzero polynomial with rational coefficients.

    Roots mod a lifting prime are Hensel-lifted to a modulus exceeding the
    divisor bound max(|a_0|, |a_lead|)^2, rationally reconstructed, and
    verified exactly, so coefficients of any size are handled.
    """
    az, _ = to_integer(a)
    if not az:
        raise ZeroDivisionError("roots of the zero polynomial")
    roots = []
    k = 0
    while az and az[0] == 0:
        az = az[1:]
        k += 1
    if k:
        roots.append(Fraction(0))
    if degree(az) <= 0:
        return roots
    sf = squarefree_part_q(az)
    if degree(sf) == 0:
        return roots
    bound = 2 * max(abs(sf[0]), abs(sf[-1])) ** 2 + 1
    dsf = deriv(sf)
    for p in LIFT_PRIMES:
        if sf[-1] % p == 0:
            continue
        if degree(gcd_p(sf, dsf, p)) != 0:
            continue
        candidates = roots_p(sf, p)
        for r in candidates:
            m = p
            while m < bound:
                m2 = m * m
                fr = eval_at(sf, r) % m2
                dfr = eval_at(dsf, r) % m2
                r = (r - fr * pow(dfr, -1, m2)) % m2
                m = m2
            rec = _rational_reconstruct(r, m)
            if rec is None:
                continue
            cand = Fraction(rec[0], rec[1])
            if eval_at(sf, cand) == 0:
                roots.append(cand)
        return sorted(set(roots))
    raise ArithmeticError("no usable lifting prime found")  # practically unreachable


def deflate_roots(a: list, roots: list) -> list:
    """Divide out (x - r) for each rational root r (with full multiplicity)."""
    out = [Fraction(c) for c in strip(list(a))]
    for r in roots:
        while eval_at(out, r) == 0 and degree(out) >= 1:
            out = divexact_q(out, [-r, 1])
    return out


def divmod_q(a: list, b: list) -> tuple:
    """Quotient and remainder over Q."""
    a = [Fraction(c) for c in strip(list(a))]
    b = [Fraction(c) for c in strip(list(b))]
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = a
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        for i, bc in enumerate(b):
            r[i + k] -= c * bc
        strip(r)
    return strip(q), r


def xgcd_q(a: list, b: list) -> tuple:
    """Extended gcd over Q[t]: returns monic g and s, t with s*a + t*b = g."""
    r0, r1 = [Fraction(c) for c in strip(list(a))], [Fraction(c) for c in strip(list(b))]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, add(s0, neg(mul(q, s1)))
        t0, t1 = t1, add(t0, neg(mul(q, t1)))
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        s0 = [Fraction(c) / lead for c in s0]
        t0 = [Fraction(c) / lead for c in t0]
    return r0, s0, t0
