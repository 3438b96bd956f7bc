"""cusplab: exact-arithmetic workbench for cuspidal plane sextics.

Everything is computed over Q (or explicit number fields) with zero
tolerance: sparse polynomial arithmetic with resultants, singular-scheme
computation and A1/A2 classification for plane curves, Zariski sextics
a*f3^2 + b*f2^3 with the full six-cusp verification, triple-plane branch
loci, the bilinear projection-center system with its exact solver and a
finite-field enumeration oracle, dual-curve and moduli numerology, and
j-invariant limits in the versal family of the cusp.
"""

from .curves import (PlaneCurve, SingularityReport, SingularityType, classify_at_point,
                     is_smooth, singular_scheme, transversal_intersection)
from .linalg import RationalMatrix, rank_and_kernel
from .numberfield import (AlgebraicPoint, NumberField, NumberFieldElem,
                          certify_irreducible, eliminate_to_minimal_poly, nf_invert)
from .numerology import (CurveClass, DualInvariants, ModuliReport, moduli_report,
                         plucker_dual, stratification_table)
from .parser import ParseError, parse_poly, print_poly, read_curve_file
from .poly import MultiPoly, derivative, resultant, squarefree_part
from .tripleplane import (BilinearSystem, CubicSurface, SolutionSet, branch_locus,
                          build_condition_system, build_cubic_surface,
                          cubic_space_independence, family_G, solve_projection_centers)
from .versal import (Arc, JValue, VersalPoint, arc_j_limit, discriminant_membership,
                     find_arc_for_j, j_invariant)
from .zariski import (SexticReport, ZariskiInput, build_sextic,
                      gradient_identity_check, verify_six_cusps)

__version__ = "0.1.0"

__all__ = [
    "MultiPoly", "derivative", "resultant", "squarefree_part",
    "RationalMatrix", "rank_and_kernel",
    "ParseError", "parse_poly", "print_poly", "read_curve_file",
    "NumberField", "NumberFieldElem", "AlgebraicPoint",
    "certify_irreducible", "nf_invert", "eliminate_to_minimal_poly",
    "PlaneCurve", "SingularityReport", "SingularityType",
    "singular_scheme", "classify_at_point", "transversal_intersection", "is_smooth",
    "ZariskiInput", "SexticReport", "build_sextic", "gradient_identity_check",
    "verify_six_cusps",
    "CubicSurface", "BilinearSystem", "SolutionSet",
    "build_cubic_surface", "branch_locus", "family_G", "build_condition_system",
    "solve_projection_centers", "cubic_space_independence",
    "CurveClass", "ModuliReport", "DualInvariants",
    "moduli_report", "plucker_dual", "stratification_table",
    "VersalPoint", "Arc", "JValue",
    "j_invariant", "discriminant_membership", "arc_j_limit", "find_arc_for_j",
]
