# Command-line interface: expression in, JSON report out.
from __future__ import annotations

import argparse
import json
import sys

from .expr import DimensionError, ParseError, elaborate, parse_expr
from .grothendieck import (
    ParityObstructionError,
    decompose_knot_class,
    decompose_link_class,
    gk_class,
)
from .linalg import homological_monodromy, char_poly
from .plane_fields import (
    OpenBookClass,
    SPHERE,
    manifold_from_json,
    plane_field_to_json,
    stable_equivalence,
)
from .plumbing import effective_mu_cap, invariants, seifert_matrix
from .search import (
    SearchConfig,
    certificate_from_json,
    certificate_to_json,
    common_stabilization,
    verify_certificate,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1  # not equivalent / exhausted / certificate invalid
EXIT_USAGE = 2


def _poly_json(poly):
    return {
        "coefficients": [list(pair) for pair in poly.key()],
        "text": str(poly),
    }


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _load_manifold(path):
    if path is None:
        return SPHERE
    with open(path) as fh:
        return manifold_from_json(json.load(fh))


def _tree(text):
    return elaborate(parse_expr(text))


def _emit(report, pretty):
    if pretty:
        for line in _pretty_lines(report, indent=""):
            print(line)
    else:
        print(json.dumps(report))


def _pretty_lines(value, indent):
    if isinstance(value, dict):
        lines = []
        width = max((len(k) for k in value), default=0)
        for key, val in value.items():
            if isinstance(val, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.extend(_pretty_lines(val, indent + "  "))
            else:
                lines.append(f"{indent}{key.ljust(width)}  {val}")
        return lines
    if isinstance(value, list):
        return [f"{indent}- {json.dumps(item)}" for item in value]
    return [f"{indent}{value}"]


def cmd_invariants(args):
    report = invariants(_tree(args.expr))
    _emit({
        "mu": report.mu,
        "lambda": report.lam,
        "alexander": _poly_json(report.alexander),
        "sigma": report.sigma,
        "det_v": report.det_v,
        "fingerprint": _jsonable(report.fingerprint),
    }, args.pretty)
    return EXIT_OK


def cmd_gk(args):
    g = gk_class(_tree(args.expr))
    a, b = decompose_link_class(g)
    report = {
        "class": {"mu": g.mu, "lambda": g.lam},
        "link_basis": {"H+": a, "H-": b},
    }
    try:
        ka, kb = decompose_knot_class(g)
        report["knot_basis"] = {"T+": ka, "E": kb}
    except ParityObstructionError as exc:
        report["knot_basis"] = None
        report["knot_basis_error"] = str(exc)
    _emit(report, args.pretty)
    return EXIT_OK


def cmd_monodromy(args):
    v = seifert_matrix(_tree(args.expr))
    h = homological_monodromy(v)
    _emit({
        "mu": h.rows,
        "matrix": [list(row) for row in h.entries],
        "characteristic": _poly_json(char_poly(h)),
    }, args.pretty)
    return EXIT_OK


def cmd_field(args):
    manifold = _load_manifold(args.manifold)
    book = OpenBookClass.from_tree(_tree(args.expr), manifold)
    report = plane_field_to_json(book.field)
    report["manifold"] = manifold.name
    _emit(report, args.pretty)
    return EXIT_OK


def cmd_equiv(args):
    manifold = _load_manifold(args.manifold)
    a = OpenBookClass.from_tree(_tree(args.expr_a), manifold)
    b = OpenBookClass.from_tree(_tree(args.expr_b), manifold)
    verdict = stable_equivalence(a, b)
    report = {"equivalent": verdict.equivalent}
    if verdict.equivalent:
        report["hminus_budget"] = verdict.hminus_budget
    _emit(report, args.pretty)
    return EXIT_OK if verdict.equivalent else EXIT_NEGATIVE


def cmd_search(args):
    cfg = SearchConfig(
        max_moves_per_side=args.depth,
        coord_bound=args.coord_bound,
        mu_cap=effective_mu_cap(),
    )
    cert = common_stabilization(_tree(args.expr_a), _tree(args.expr_b), cfg)
    if cert is None:
        _emit({"exhausted": True, "depth": args.depth,
               "coord_bound": args.coord_bound}, args.pretty)
        return EXIT_NEGATIVE
    _emit(certificate_to_json(cert), args.pretty)
    return EXIT_OK


def cmd_verify(args):
    with open(args.cert) as fh:
        cert = certificate_from_json(json.load(fh))
    valid = verify_certificate(_tree(args.expr_a), _tree(args.expr_b), cert)
    _emit({"valid": valid}, args.pretty)
    return EXIT_OK if valid else EXIT_NEGATIVE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfweave",
        description="Invariants, stable equivalence and stabilization "
                    "certificates for open books plumbed from Hopf bands.",
    )
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable tables instead of compact JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant report of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gk", help="class and basis decompositions")
    p.add_argument("expr")
    p.set_defaults(func=cmd_gk)

    p = sub.add_parser("monodromy", help="homological monodromy matrix")
    p.add_argument("expr")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("field", help="plane-field class of the open book")
    p.add_argument("expr")
    p.add_argument("--manifold", help="manifold descriptor JSON file")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("equiv", help="stable-equivalence verdict")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("--manifold", help="manifold descriptor JSON file")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("search", help="search for a common stabilization")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("--depth", type=int, required=True,
                   help="maximum moves per side")
    p.add_argument("--coord-bound", type=int, default=1,
                   help="gluing-vector entry bound (default 1)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="replay and check a certificate file")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("--cert", required=True, help="certificate JSON file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
