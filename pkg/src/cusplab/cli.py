"""Batch command-line front end.

Every subcommand prints a report -- human-readable by default, a versioned
JSON document with --json -- and exits 0 on success, 1 when a verification
failed (for example a non-transverse input), 2 on parse or usage errors and
3 on internal errors.  Identical argv (including --seed) gives byte-identical
JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import numerology, oracle, tripleplane, versal, zariski
from .curves import CurveError, SingularityReport, SingularityType
from .numberfield import AlgebraicPoint, NumberFieldElem
from .parser import ParseError, parse_poly, print_poly
from .poly import MultiPoly, PolynomialError
from .tripleplane import ProjectionCenter, SolutionSet
from .versal import Arc, JValue

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class VerificationFailure(Exception):
    """Raised by handlers when a computation ran but the checks failed."""

    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def jsonable(obj):
    """Exact values to JSON-friendly structures (strings for all numbers)."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, MultiPoly):
        return print_poly(obj)
    if isinstance(obj, NumberFieldElem):
        return {"rep": print_poly(obj.rep_poly(), names=("t",) * 4),
                "modulus": print_poly(obj.field.modulus_poly(), names=("t",) * 4)}
    if isinstance(obj, AlgebraicPoint):
        return {"coordinates": [jsonable(c) for c in obj.coords],
                "field": None if obj.field is None else jsonable_field(obj.field)}
    if isinstance(obj, SingularityType):
        return {"tag": obj.tag, "multiplicity": obj.multiplicity, "quad_rank": obj.quad_rank}
    if isinstance(obj, SingularityReport):
        return {
            "scheme_degree": obj.scheme_degree,
            "reduced": obj.reduced,
            "eliminant": print_poly(obj.eliminant, names=("t",) * 4),
            "shear": [list(r) for r in obj.shear_used],
            "rational_points": [
                {"point": jsonable(p), "type": jsonable(t)} for p, t in obj.rational_points],
            "field_packets": [
                {"modulus": print_poly(pkg.field.modulus_poly(), names=("t",) * 4),
                 "certification": pkg.field.status,
                 "point_count": pkg.point_count,
                 "coordinates": [jsonable(c) for c in pkg.coords],
                 "type": jsonable(pkg.classification) if not isinstance(pkg.classification, str)
                         else pkg.classification}
                for pkg in obj.field_points],
        }
    if isinstance(obj, ProjectionCenter):
        return {"v": [jsonable(c) for c in obj.v],
                "beta": [jsonable(c) for c in obj.beta],
                "mu": jsonable(obj.mu),
                "lambda": jsonable(obj.lam),
                "field": None if obj.field is None else jsonable_field(obj.field)}
    if isinstance(obj, SolutionSet):
        return {"centers": [jsonable(c) for c in obj.centers],
                "lambda_zero": [jsonable(c) for c in obj.lambda_zero],
                "components": list(obj.components),
                "complete": obj.complete}
    if isinstance(obj, JValue):
        return {"kind": obj.kind,
                "value": None if obj.value is None else str(obj.value),
                "note": obj.note}
    if isinstance(obj, Arc):
        return {"a": [jsonable(c) for c in obj.a],
                "b": [jsonable(c) for c in obj.b],
                "truncation": obj.truncation,
                "field": None if obj.field is None else jsonable_field(obj.field)}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def jsonable_field(field) -> dict:
    return {"modulus": print_poly(field.modulus_poly(), names=("t",) * 4),
            "certification": field.status,
            "certificate_prime": None if not field.certificate else field.certificate[0]}


def emit(args, command: str, inputs: dict, result, status: str, provenance: list) -> None:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": jsonable(inputs),
        "result": jsonable(result),
        "status": status,
        "provenance": provenance,
    }
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        _print_text(report)


def _print_text(report: dict) -> None:
    print(f"[{report['command']}] status: {report['status']}")
    for key, val in report["inputs"].items():
        print(f"  input {key} = {val}")
    _print_tree(report["result"], indent=2)


def _print_tree(node, indent=0):
    pad = " " * indent
    if isinstance(node, dict):
        for k, v in node.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _print_tree(v, indent + 2)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(node, list):
        for v in node:
            if isinstance(v, (dict, list)):
                _print_tree(v, indent)
                print(f"{pad}-")
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{node}")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}", 0) from exc


def _parse_coeff_list(text: str) -> tuple:
    if not text.strip():
        return ()
    return tuple(_parse_rational(part) for part in text.split(","))


def _poly_arg(text: str, num_vars: int = 3) -> MultiPoly:
    return parse_poly(text, num_vars)


# -- handlers -------------------------------------------------------------------


def cmd_parse(args) -> int:
    p = _poly_arg(args.expr, None if args.vars == 0 else args.vars)
    emit(args, "parse", {"expr": args.expr}, {"canonical": print_poly(p),
                                              "num_vars": p.num_vars,
                                              "total_degree": p.total_degree()},
         "ok", ["expression-grammar"])
    return EXIT_OK


def cmd_sextic_verify(args) -> int:
    f2 = _poly_arg(args.f2)
    f3 = _poly_arg(args.f3)
    inp = zariski.ZariskiInput(f2, f3, _parse_rational(args.a), _parse_rational(args.b))
    rep = zariski.verify_six_cusps(inp, seed=args.seed)
    result = {
        "sextic": rep.sextic.f,
        "coefficients": {"a": inp.a, "b": inp.b},
        "conic_smooth": rep.conic_smooth,
        "cubic_smooth": rep.cubic_smooth,
        "transverse": rep.transverse,
        "intersection_count": rep.intersection_count,
        "scheme_matches_intersection": rep.scheme_matches_intersection,
        "cusp_count": rep.cusp_count,
        "all_cusps_on_conic": rep.all_cusps_on_conic,
        "genus": rep.genus,
        "gradient_identity": rep.gradient_identity_ok,
        "problems": list(rep.problems),
        "singular_scheme": rep.singularities,
        "irreducibility": "asserted for smooth transverse input, not recomputed",
        "note": ("coordinates of the form [a, sqrt(a), 1] do not satisfy "
                 "f2 = f3 = 0 for the classical input; singular points are "
                 "recomputed exactly (x1^2 = 1 - a^2)"),
    }
    status = "ok" if rep.verified else "verification_failed"
    emit(args, "sextic-verify", {"f2": args.f2, "f3": args.f3, "a": args.a, "b": args.b},
         result, status, ["zariski-sextic:six-cusps-on-conic", "gradient-identity",
                          "singularity-classification"])
    return EXIT_OK if rep.verified else EXIT_VERIFICATION


def cmd_branch_locus(args) -> int:
    from .curves import curve_is_reduced

    f2 = _poly_arg(args.f2)
    f3 = _poly_arg(args.f3)
    c1, c2 = tripleplane.convention(args.convention)
    surface = tripleplane.build_cubic_surface(f2, f3, c1, c2)
    curve = tripleplane.branch_locus(surface)
    identity = tripleplane.branch_locus_identity_holds(surface)
    reduced_flag = curve_is_reduced(curve, seed=args.seed)
    result = {
        "surface": surface.F3,
        "convention": {"c1": c1, "c2": c2},
        "branch_locus": curve.f,
        "identity_4c1^3f2^3+27c2^2f3^2": identity,
        "branch_locus_reduced": reduced_flag,
    }
    status = "ok" if identity else "verification_failed"
    emit(args, "branch-locus", {"f2": args.f2, "f3": args.f3, "convention": args.convention},
         result, status, ["branch-locus:cubic-discriminant-identity"])
    return EXIT_OK if identity else EXIT_VERIFICATION


def cmd_centers(args) -> int:
    f2 = _poly_arg(args.f2)
    f3 = _poly_arg(args.f3)
    system = tripleplane.build_condition_system(f2, f3, args.convention)
    solset = tripleplane.solve_projection_centers(system)
    rows = [{"key": r.key, "equation": r.poly_string()} for r in system.rows]
    oracle_results = []
    oracle_agrees = None
    if not args.no_oracle:
        primes = [int(p) for p in args.oracle_primes.split(",") if p.strip()]
        oracle_agrees = True
        for p in primes:
            counts = oracle.count_solutions_mod_p(system, p)
            predicted = oracle.predicted_pair_counts(solset, p)
            entry = {
                "prime": p,
                "pairs_lambda_nonzero": counts.pairs_lambda_nonzero,
                "pairs_lambda_zero": counts.pairs_lambda_zero,
                "predicted": None if predicted is None else
                    {"pairs_lambda_nonzero": predicted[0], "pairs_lambda_zero": predicted[1]},
            }
            if predicted is None:
                entry["agrees"] = None
            else:
                entry["agrees"] = predicted == (counts.pairs_lambda_nonzero,
                                                counts.pairs_lambda_zero)
                oracle_agrees = oracle_agrees and entry["agrees"]
            oracle_results.append(entry)
    result = {
        "system": rows,
        "solutions": solset,
        "oracle": oracle_results,
        "oracle_agrees": oracle_agrees,
    }
    ok = solset.complete and (oracle_agrees in (None, True))
    emit(args, "centers", {"f2": args.f2, "f3": args.f3, "convention": args.convention},
         result, "ok" if ok else "verification_failed",
         ["projection-centers:bilinear-system", "projection-centers:finite-field-oracle"])
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_numerology(args) -> int:
    rep = numerology.moduli_report(numerology.CurveClass(args.n, args.d, args.k))
    emit(args, "numerology", {"n": args.n, "d": args.d, "k": args.k}, rep.as_dict(),
         "ok", ["moduli:brill-noether-bound", "moduli:severi-dimension"])
    return EXIT_OK


def cmd_plucker(args) -> int:
    c = numerology.CurveClass(args.n, args.d, args.k)
    dual = numerology.plucker_dual(c)
    result = {"n_star": dual.n_star, "d_star": dual.d_star, "k_star": dual.k_star,
              "genus": c.genus()}
    emit(args, "plucker", {"n": args.n, "d": args.d, "k": args.k}, result,
         "ok", ["plucker:dual-invariants"])
    return EXIT_OK


def cmd_strat_table(args) -> int:
    rows = [{"report": r["report"].as_dict(), "dominant_expected": r["dominant_expected"]}
            for r in numerology.stratification_table()]
    if not args.json:
        print(numerology.format_stratification_table())
        return EXIT_OK
    emit(args, "strat-table", {}, rows, "ok", ["moduli:cusp-stratification"])
    return EXIT_OK


def cmd_j_limit(args) -> int:
    arc = Arc(_parse_coeff_list(args.a), _parse_coeff_list(args.b),
              truncation=args.truncation)
    limit, tangent = versal.arc_j_limit(arc)
    emit(args, "j-limit", {"a": args.a, "b": args.b, "truncation": args.truncation},
         {"limit": limit, "tangent_to_b_axis": tangent},
         "ok" if limit.kind != "indeterminate" else "verification_failed",
         ["versal-cusp:j-limit"])
    return EXIT_OK if limit.kind != "indeterminate" else EXIT_VERIFICATION


def cmd_j_arc(args) -> int:
    j0 = _parse_rational(args.j0)
    arc = versal.find_arc_for_j(j0, truncation=args.truncation)
    limit, tangent = versal.arc_j_limit(arc)
    ok = limit.kind == "finite" and limit.value == j0
    emit(args, "j-arc", {"j0": args.j0},
         {"arc": arc, "limit": limit, "tangent_to_b_axis": tangent, "round_trip": ok},
         "ok" if ok else "verification_failed",
         ["versal-cusp:arc-construction", "versal-cusp:j-limit"])
    return EXIT_OK if ok else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cusplab",
        description="Exact workbench for cuspidal plane sextics and their invariants.")
    ap.add_argument("--json", action="store_true", help="machine-readable report")
    ap.add_argument("--seed", type=int, default=0, help="seed for shear selection")
    ap.add_argument("--truncation", type=int, default=versal.DEFAULT_TRUNCATION,
                    help="truncation order for arcs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo the canonical form of an expression")
    p.add_argument("expr")
    p.add_argument("--vars", type=int, default=0, help="fix the variable count (0 = infer)")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("sextic-verify", help="six-cusp verification for a*f3^2 + b*f2^3")
    p.add_argument("--f2", required=True)
    p.add_argument("--f3", required=True)
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    p.set_defaults(func=cmd_sextic_verify)

    p = sub.add_parser("branch-locus", help="resultant branch curve of the cubic surface")
    p.add_argument("--f2", required=True)
    p.add_argument("--f3", required=True)
    p.add_argument("--convention", default="lemma",
                   help="'lemma' for (c1,c2)=(-3,2), 'corollary' for (1,1)")
    p.set_defaults(func=cmd_branch_locus)

    p = sub.add_parser("centers", help="solve the projection-center system")
    p.add_argument("--f2", required=True)
    p.add_argument("--f3", required=True)
    p.add_argument("--convention", default="corollary")
    p.add_argument("--oracle-primes", default="101,103,107")
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("numerology", help="moduli bounds for (n, d, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_numerology)

    p = sub.add_parser("plucker", help="dual-curve invariants for (n, d, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_plucker)

    p = sub.add_parser("strat-table", help="sextic stratification table (k = 9..6)")
    p.set_defaults(func=cmd_strat_table)

    p = sub.add_parser("j-limit", help="j-invariant limit along an arc")
    p.add_argument("--a", required=True, help="comma-separated coefficients of s^1.. for a(s)")
    p.add_argument("--b", required=True, help="comma-separated coefficients of s^1.. for b(s)")
    p.set_defaults(func=cmd_j_limit)

    p = sub.add_parser("j-arc", help="tangent arc realizing a prescribed j-limit")
    p.add_argument("--j0", required=True)
    p.set_defaults(func=cmd_j_arc)
    return ap


def main(argv=None) -> int:
    from .zariski import ZariskiError

    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error[parse]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CurveError, ZariskiError) as exc:
        print(f"error[verification]: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (ValueError, PolynomialError) as exc:
        print(f"error[input]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"error[arithmetic]: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - safety net
        print(f"error[internal]: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
