"""Parsing and printing of polynomial expressions.

Grammar (whitespace ignored, explicit '*' required):

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nonneg-int)?
    base   := variable | rational | '(' expr ')'

Variables are x0..x3 with aliases x, y, z, w; rationals are written a or a/b.
The optional leading sign is a deliberate extension of the core grammar so
that printed canonical forms (which may start with '-') always re-parse.
Exponents above 64 are rejected.  This grammar is the on-disk format for
curve files: one polynomial per line, '#' starts a comment.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly, format_poly

VARIABLES = {"x0": 0, "x1": 1, "x2": 2, "x3": 3, "x": 0, "y": 1, "z": 2, "w": 3}
MAX_EXPONENT = 64


class ParseError(ValueError):
    """Syntax error with a 0-based source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.max_var = -1

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _take(self) -> str:
        ch = self._peek()
        self.pos += 1
        return ch

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def parse(self):
        terms = self.expr()
        self._skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        return terms

    def expr(self):
        ch = self._peek()
        sign = 1
        if ch in ("+", "-"):
            self._take()
            sign = -1 if ch == "-" else 1
        total = self.term()
        if sign < 0:
            total = [(c * -1, e) for c, e in total]
        while True:
            ch = self._peek()
            if ch not in ("+", "-"):
                break
            self._take()
            nxt = self.term()
            if ch == "-":
                nxt = [(c * -1, e) for c, e in nxt]
            total = total + nxt
        return total

    def term(self):
        product = self.factor()
        while self._peek() == "*":
            self._take()
            product = _mul_terms(product, self.factor())
        return product

    def factor(self):
        base = self.base()
        if self._peek() == "^":
            caret_pos = self.pos
            self._take()
            if self._peek() == "^":
                raise ParseError("doubled '^'", self.pos)
            exp_pos = self.pos
            e = self._integer()
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds the limit {MAX_EXPONENT}", exp_pos)
            result = [(Fraction(1), {})]
            for _ in range(e):
                result = _mul_terms(result, base)
            return result
        return base

    def base(self):
        ch = self._peek()
        if ch == "(":
            self._take()
            inner = self.expr()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self._take()
            return inner
        if ch.isdigit():
            num = self._integer()
            if self._peek() == "/":
                self._take()
                den_pos = self.pos
                den = self._integer()
                if den == 0:
                    raise ParseError("zero denominator", den_pos)
                return [(Fraction(num, den), {})]
            return [(Fraction(num), {})]
        if ch.isalpha():
            start = self.pos
            name = self._take()
            if self._peek().isdigit() and name == "x":
                # x0..x3 (multi-digit indices rejected)
                idx_char = self._take()
                name = name + idx_char
            if name not in VARIABLES:
                raise ParseError(f"unknown variable {name!r}", start)
            idx = VARIABLES[name]
            self.max_var = max(self.max_var, idx)
            return [(Fraction(1), {idx: 1})]
        if ch == "":
            raise ParseError("unexpected end of input", self.pos)
        raise ParseError(f"unexpected character {ch!r}", self.pos)


def _mul_terms(a, b):
    out = []
    for ca, ea in a:
        for cb, eb in b:
            e = dict(ea)
            for i, k in eb.items():
                e[i] = e.get(i, 0) + k
            out.append((ca * cb, e))
    return out


def parse_poly(text: str, num_vars: int | None = None) -> MultiPoly:
    """Parse an expression into canonical form.

    When num_vars is omitted it is inferred as (highest variable index + 1),
    with a minimum of 1.
    """
    parser = _Parser(text)
    terms = parser.parse()
    nv = num_vars if num_vars is not None else max(parser.max_var + 1, 1)
    if parser.max_var >= nv:
        raise ParseError(f"variable x{parser.max_var} not allowed with {nv} variables", 0)
    acc: dict = {}
    for c, e in terms:
        expo = tuple(e.get(i, 0) for i in range(nv))
        acc[expo] = acc.get(expo, Fraction(0)) + c
    return MultiPoly(nv, acc)


def print_poly(p: MultiPoly, names=("x0", "x1", "x2", "x3")) -> str:
    """Canonical string form; parse_poly(print_poly(p)) == p exactly."""
    return format_poly(p, names)


def read_curve_file(path: str, num_vars: int | None = 3) -> list:
    """Parse a curve file: one polynomial per line, '#' starts a comment."""
    polys = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                polys.append(parse_poly(line, num_vars))
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}", exc.position) from None
    return polys
