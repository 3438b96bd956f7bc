"""Closed-form invariants of families of nodal-cuspidal plane curves.

Genus, Brill-Noether numbers, expected Severi dimensions, moduli-dimension
bounds, dual-curve invariants from the classical Plucker formulas, and the
stratification table for sextics with 6..9 cusps.  Pure integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict


class NumerologyError(ValueError):
    pass


@dataclass(frozen=True)
class CurveClass:
    """Plane curves of degree n with d nodes and k cusps."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.d < 0 or self.k < 0:
            raise NumerologyError("need n >= 1, d >= 0, k >= 0")
        if self.genus() < 0:
            raise NumerologyError(f"negative genus for (n,d,k)=({self.n},{self.d},{self.k})")

    def genus(self) -> int:
        return (self.n - 1) * (self.n - 2) // 2 - self.d - self.k


@dataclass(frozen=True)
class ModuliReport:
    n: int
    d: int
    k: int
    g: int
    rho: int
    dim_moduli: int
    expected_severi_dim: int
    moduli_upper_bound: int
    fiber_lower_bound: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DualInvariants:
    n_star: int
    d_star: int
    k_star: int


def genus(n: int, d: int, k: int) -> int:
    return CurveClass(n, d, k).genus()


def brill_noether(g: int, n: int) -> int:
    """rho(2, g, n) = 3n - 2g - 6 for nets of degree n on a genus-g curve."""
    return 3 * n - 2 * g - 6


def moduli_dimension(g: int) -> int:
    """Dimension of the moduli space of genus-g curves (0, 1 and 3g-3 cases)."""
    if g < 0:
        raise NumerologyError("negative genus")
    if g == 0:
        return 0
    if g == 1:
        return 1
    return 3 * g - 3


def moduli_report(c: CurveClass) -> ModuliReport:
    g = c.genus()
    rho = brill_noether(g, c.n)
    dim_m = moduli_dimension(g)
    return ModuliReport(
        n=c.n, d=c.d, k=c.k, g=g, rho=rho, dim_moduli=dim_m,
        expected_severi_dim=3 * c.n + g - 1 - c.k,
        moduli_upper_bound=min(dim_m, dim_m + rho - c.k),
        fiber_lower_bound=max(8, 8 + rho - c.k),
    )


def plucker_dual(c: CurveClass) -> DualInvariants:
    """Degree, nodes and cusps of the dual curve (nodal-cuspidal model).

    n* = n(n-1) - 2d - 3k,  k* = 3n(n-2) - 6d - 8k,  and d* is pinned by
    genus invariance.
    """
    g = c.genus()
    n_star = c.n * (c.n - 1) - 2 * c.d - 3 * c.k
    k_star = 3 * c.n * (c.n - 2) - 6 * c.d - 8 * c.k
    if n_star < 1 or k_star < 0:
        raise NumerologyError("class data not Plucker-consistent")
    d_star = (n_star - 1) * (n_star - 2) // 2 - g - k_star
    if d_star < 0:
        raise NumerologyError("class data not Plucker-consistent")
    return DualInvariants(n_star=n_star, d_star=d_star, k_star=k_star)


def stratification_table() -> list:
    """Moduli bounds for irreducible sextics with k = 9, 8, 7, 6 cusps.

    Each row is a ModuliReport plus a flag marking the k = 8 stratum, the one
    with rho - k = 0 where the moduli map is expected dominant.
    """
    rows = []
    for k in (9, 8, 7, 6):
        rep = moduli_report(CurveClass(6, 0, k))
        rows.append({
            "report": rep,
            "dominant_expected": rep.rho - rep.k == 0,
        })
    return rows


def format_stratification_table() -> str:
    header = f"{'k':>2} {'g':>2} {'rho':>4} {'dim M_g':>8} {'bound':>6}  note"
    lines = [header, "-" * len(header)]
    for row in stratification_table():
        r = row["report"]
        note = "moduli map expected dominant (rho - k = 0)" if row["dominant_expected"] else ""
        lines.append(f"{r.k:>2} {r.g:>2} {r.rho:>4} {r.dim_moduli:>8} {r.moduli_upper_bound:>6}  {note}")
    return "\n".join(lines)
