"""Exact linear algebra over Q: rank, kernel and reduced echelon forms.

Matrices are plain lists of Fraction rows wrapped in a thin RationalMatrix
shell.  Elimination uses exact pivots throughout; for the matrix sizes in
this package (at most tens of rows) Fraction arithmetic with occasional
fraction-free cross-multiplication is entirely adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _frac_rows(entries) -> list:
    return [[Fraction(x) for x in row] for row in entries]


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence]) -> "RationalMatrix":
        rows = _frac_rows(entries)
        if not rows:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, tuple(tuple(r) for r in rows))

    def row_list(self) -> list:
        return [list(r) for r in self.entries]


def rref(entries: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form: returns (rref rows, pivot column list)."""
    m = _frac_rows(entries)
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank_and_kernel(matrix) -> tuple:
    """Exact rank and a canonical kernel basis.

    Accepts a RationalMatrix or a plain list of rows.  Kernel vectors are
    normalized with a 1 in their defining free column and zeros in the other
    free columns, listed in increasing free-column order.
    """
    rows = matrix.row_list() if isinstance(matrix, RationalMatrix) else _frac_rows(matrix)
    if not rows:
        raise ValueError("empty matrix")
    ncols = len(rows[0])
    m, pivots = rref(rows)
    rank = len(pivots)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(tuple(vec))
    return rank, basis


def solve_linear(entries: Sequence[Sequence], rhs: Sequence) -> tuple | None:
    """One solution of A x = b, or None if inconsistent.

    Returns (particular solution, kernel basis of A).
    """
    rows = _frac_rows(entries)
    b = [Fraction(x) for x in rhs]
    ncols = len(rows[0])
    aug = [row + [bi] for row, bi in zip(rows, b)]
    m, pivots = rref(aug)
    # inconsistent if a pivot lands in the rhs column
    if pivots and pivots[-1] == ncols:
        return None
    sol = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        sol[pc] = m[i][ncols]
    _, kernel = rank_and_kernel(rows)
    return tuple(sol), kernel
