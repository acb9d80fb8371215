"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 precondition not met, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify, constructions as C
from .errors import (
    FactorizationRangeError,
    OracleRangeError,
    ParseError,
    PreconditionError,
    VerificationError,
)
from .fields import extend
from .polynomials import Poly, format_exps
from .textio import parse_element, parse_field, parse_poly

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFICATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", required=True, help='field descriptor, e.g. "GF(2)" or "GF(3^2)"')
    common.add_argument("--format", choices=("text", "json", "exps"), default="text")
    common.add_argument("--verify", choices=C.VERIFY_LEVELS, default="fast")
    common.add_argument("--trial-bound", type=int, help="trial-division bound for factoring group orders")

    ap = _Parser(prog="irredcomp", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="run one construction")
    c.add_argument("name", choices=C.CONSTRUCTIONS)
    for flag in ("--f", "--l", "--P", "--g"):
        c.add_argument(flag, help="polynomial")
    for flag in ("--alpha", "--beta", "--gamma", "--theta"):
        c.add_argument(flag, help="field element")
    c.add_argument("--r", type=int)
    c.add_argument("--k", type=int, help="extension degree (theorem1)")
    c.add_argument("--e", type=int, help="order cofactor (theorem8); searched when omitted")

    v = sub.add_parser("verify", parents=[common], help="classify a polynomial")
    v.add_argument("--poly", required=True)
    v.add_argument("--order", action="store_true", help="also compute the order and primitivity")

    e = sub.add_parser("enumerate", parents=[common], help="list monic irreducibles of a degree")
    e.add_argument("--degree", type=int, required=True)
    e.add_argument("--primitive", action="store_true")
    e.add_argument("--check-mobius", action="store_true")
    return ap


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.name} needs " + ", ".join("--" + m for m in missing))


def _run_construction(args, K):
    poly = lambda s: parse_poly(s, K)  # noqa: E731
    elem = lambda s, F=K: parse_element(s, F)  # noqa: E731
    name, verify = args.name, args.verify
    if name == "theorem1":
        _need(args, "f", "k", "alpha", "beta")
        L = extend(K, args.k)
        return C.theorem1_compose(poly(args.f), elem(args.alpha, L), elem(args.beta, L), args.k, verify)
    if name == "cohen":
        _need(args, "P", "f", "g")
        return C.cohen_compose(poly(args.P), poly(args.f), poly(args.g), verify)
    if name == "varshamov":
        _need(args, "f", "r")
        return C.varshamov_construct(poly(args.f), args.r, verify)
    if name == "ogm":
        _need(args, "l")
        return C.ogm_construct(poly(args.l), verify)
    if name == "theorem3":
        _need(args, "f", "l")
        return C.theorem3_construct(poly(args.f), poly(args.l), verify)
    if name == "cor-ci":
        _need(args, "f", "l")
        return C.corollary_ci_construct(poly(args.f), poly(args.l), verify)
    if name == "cor-theta":
        _need(args, "f", "theta")
        return C.corollary_theta_construct(poly(args.f), elem(args.theta), verify)
    if name == "theorem5":
        _need(args, "f", "beta", "gamma")
        return C.theorem5_construct(poly(args.f), elem(args.beta), elem(args.gamma), verify)
    if name == "theorem8":
        _need(args, "f")
        f = poly(args.f)
        e = args.e if args.e is not None else C.find_order_form(f)
        rep = C.theorem8_construct(f, e, verify)
        if args.e is None:
            rep.notes.append(f"e = {e} found by order search")
        return rep
    if name == "theorem10":
        _need(args, "f")
        return C.theorem10_construct(poly(args.f), verify)
    _need(args, "f")
    return C.theorem11_construct(poly(args.f), verify)


def _exps_or_text(p: Poly) -> str:
    try:
        return format_exps(p)
    except ValueError:
        return str(p)


def _emit_report(rep, fmt, out):
    if fmt == "json":
        print(rep.to_json(), file=out)
    elif fmt == "exps":
        print(_exps_or_text(rep.output) if rep.output is not None else "none", file=out)
    else:
        print(rep.to_text(), file=out)


def cmd_construct(args, K, out) -> int:
    try:
        rep = _run_construction(args, K)
    except VerificationError as exc:
        if exc.report is not None:
            _emit_report(exc.report, args.format, out)
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    _emit_report(rep, args.format, out)
    return EXIT_OK if rep.status == C.STATUS_OK else EXIT_PRECONDITION


def cmd_verify(args, K, out) -> int:
    f = parse_poly(args.poly, K)
    if f.degree < 1:
        raise PreconditionError("polynomial must be nonconstant")
    res: dict = {"field": K.descriptor(), "poly": str(f), "degree": f.degree}
    irr = classify.is_irreducible(f)
    res["irreducible"] = irr
    if args.order and irr and f[0] != K.zero:
        res["order"] = classify.poly_order(f)
        res["primitive"] = res["order"] == K.order**f.degree - 1
    elif args.order:
        res["order"] = None
        res["primitive"] = False
    if args.verify == "oracle":
        try:
            res["oracle"] = classify.brute_force_irreducible(f)
        except OracleRangeError as exc:
            res["oracle"] = None
            res["note"] = str(exc)
    ok = irr and res.get("oracle", irr) in (irr, None)
    if args.format == "json":
        print(json.dumps(res, indent=2), file=out)
    elif args.format == "exps":
        print(_exps_or_text(f), "irreducible" if irr else "reducible", file=out)
    else:
        print(f"{f}: {'irreducible' if irr else 'reducible'}", file=out)
        for key in ("order", "primitive", "oracle", "note"):
            if key in res:
                print(f"{key}: {res[key]}", file=out)
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_enumerate(args, K, out) -> int:
    n = args.degree
    if n < 1:
        raise PreconditionError("degree must be >= 1")
    polys = classify.enumerate_irreducibles(K, n, primitive=args.primitive)
    res: dict = {"field": K.descriptor(), "degree": n, "primitive": args.primitive,
                 "count": len(polys), "polys": [str(p) for p in polys]}
    code = EXIT_OK
    if args.check_mobius:
        every = polys if not args.primitive else classify.enumerate_irreducibles(K, n)
        prod = Poly.constant(K, 1)
        for p in every:
            prod = prod * p
        res["mobius_ok"] = prod == classify.mobius_product(K, n)
        if not res["mobius_ok"]:
            code = EXIT_VERIFICATION
    if args.format == "json":
        print(json.dumps(res, indent=2), file=out)
    else:
        show = _exps_or_text if args.format == "exps" else str
        for p in polys:
            print(show(p), file=out)
        if args.check_mobius:
            print(f"mobius check: {'OK' if res['mobius_ok'] else 'FAILED'}", file=out)
    return code


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.trial_bound is None:
        return _dispatch(args, out)
    if args.trial_bound < 2:
        print("error: --trial-bound must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    saved = os.environ.get("GALOIS_TRIAL_BOUND")
    os.environ["GALOIS_TRIAL_BOUND"] = str(args.trial_bound)
    try:
        return _dispatch(args, out)
    finally:
        if saved is None:
            del os.environ["GALOIS_TRIAL_BOUND"]
        else:
            os.environ["GALOIS_TRIAL_BOUND"] = saved


def _dispatch(args, out) -> int:
    try:
        K = parse_field(args.field)
        handler = {"construct": cmd_construct, "verify": cmd_verify, "enumerate": cmd_enumerate}
        return handler[args.command](args, K, out)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, FactorizationRangeError, OracleRangeError) as exc:
        print(f"precondition not met: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ValueError as exc:
        # e.g. exps format requested for non-binary coefficients
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
