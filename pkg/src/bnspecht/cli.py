"""Command-line interface: every analysis as a reproducible batch command."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import BnSpechtError, ResourceLimitExceeded
from .groebner import (
    ResourceLimits,
    covering_certificate,
    inclusion_by_certificates,
    radical_report,
    specht_ideal_contains,
    universal_gb_check,
)
from .invariants import detection_report, rank_bound
from .partitions import (
    bidominates,
    hasse_diagram,
    hecke_leq,
    induced_leq,
    parse_bipartition,
)
from .polynomials import parse_polynomial
from .tableaux import reference_bitableau, specht_generators, specht_polynomial_bn
from .varieties import bn_orbit_type, decomposition_report, sn_orbit_type

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_RESOURCE = 3


def _limits(args) -> ResourceLimits:
    return ResourceLimits(max_basis=args.max_basis, max_terms=args.max_terms)


def _cmd_poset(args) -> dict | str:
    diagram = hasse_diagram(args.n)
    if args.dot:
        return diagram.to_dot()
    return json.loads(diagram.to_json())


def _cmd_order(args) -> dict:
    a = parse_bipartition(args.a)
    b = parse_bipartition(args.b)
    above = {
        "bidom": bidominates,
        "hecke": lambda x, y: hecke_leq(y, x),
        "induced": lambda x, y: induced_leq(y, x),
    }[args.relation]
    a_geq_b = above(a, b)
    b_geq_a = above(b, a)
    return {
        "a": str(a),
        "b": str(b),
        "relation": args.relation,
        "a_geq_b": a_geq_b,
        "b_geq_a": b_geq_a,
        "comparable": a_geq_b or b_geq_a,
    }


def _cmd_specht(args) -> dict:
    shape = parse_bipartition(args.shape)
    if args.all:
        gens = specht_generators(shape, args.n)
    else:
        gens = [specht_polynomial_bn(reference_bitableau(shape, args.n))]
    return {"shape": str(shape), "n": args.n, "generators": [str(g) for g in gens]}


def _cmd_ideal_inc(args) -> dict:
    a = parse_bipartition(args.a)
    b = parse_bipartition(args.b)
    limits = _limits(args)
    out = {"a": str(a), "b": str(b), "n": args.n, "method": args.method}
    if args.method == "groebner":
        out["included"] = specht_ideal_contains(a, b, args.n, limits=limits)
    else:
        if not bidominates(a, b):
            out["included"] = False
            out["chain"] = []
        else:
            report = inclusion_by_certificates(a, b, args.n, limits=limits)
            out["included"] = True
            out["chain"] = [str(c) for c in report.chain]
            out["verified_steps"] = list(report.verified_steps)
    return out


def _cmd_variety(args) -> dict:
    shape = parse_bipartition(args.shape)
    if shape.size != args.n:
        raise ValueError(f"shape {shape} has size {shape.size}, expected {args.n}")
    return decomposition_report(shape)


def _cmd_orbit_type(args) -> dict:
    coords = tuple(Fraction(piece.strip()) for piece in args.point.split(","))
    return {
        "point": [str(c) for c in coords],
        "sn_type": str(sn_orbit_type(coords)),
        "bn_type": str(bn_orbit_type(coords)),
    }


def _cmd_gamma(args) -> dict:
    return detection_report(parse_polynomial(args.poly, args.n), args.n)


def _cmd_certify_cover(args) -> dict:
    return covering_certificate(args.case, args.a, args.b, _limits(args)).to_json()


def _cmd_conjecture(args) -> dict:
    shape = parse_bipartition(args.shape)
    limits = _limits(args)
    orders = [tag.strip() for tag in args.orders.split(",") if tag.strip()]
    report = universal_gb_check(shape, args.n, orders, limits).to_json()
    report["radical"] = radical_report(shape, args.n, limits)
    return report


def _cmd_rank_bound(args) -> dict:
    shape = parse_bipartition(args.shape)
    return {"shape": str(shape), "n": args.n, "rank_bound": rank_bound(shape, args.n)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bnspecht")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-basis", type=int, default=2000)
    common.add_argument("--max-terms", type=int, default=200000)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", parents=[common])
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("order", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--relation", choices=["bidom", "hecke", "induced"], default="bidom")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("specht", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=_cmd_specht)

    p = sub.add_parser("ideal-inc", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["groebner", "certificate"], default="groebner")
    p.set_defaults(func=_cmd_ideal_inc)

    p = sub.add_parser("variety", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_variety)

    p = sub.add_parser("orbit-type", parents=[common])
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_orbit_type)

    p = sub.add_parser("gamma", parents=[common])
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("certify-cover", parents=[common])
    p.add_argument("--case", type=int, choices=[3, 4], required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=_cmd_certify_cover)

    p = sub.add_parser("conjecture", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--orders", default="lex,deglex,degrevlex")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("rank-bound", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_rank_bound)

    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except ResourceLimitExceeded as exc:
        print(json.dumps({"status": "resource-exceeded", "error": str(exc)}, indent=2))
        return EXIT_RESOURCE
    except (BnSpechtError, ValueError) as exc:
        print(json.dumps({"status": "rejected-input", "error": str(exc)}, indent=2))
        return EXIT_REJECTED
    if isinstance(payload, str):  # raw DOT text
        print(payload)
    else:
        print(json.dumps({"status": "ok", "payload": payload}, indent=2))
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
