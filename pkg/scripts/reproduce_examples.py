#!/usr/bin/env python3
"""Run every construction on its worked example and print the result.

Usage: python scripts/reproduce_examples.py [--verify fast|oracle|none] [--json]
"""

import argparse
import sys

from irredcomp import constructions as C
from irredcomp import extend, make_field
from irredcomp.errors import VerificationError
from irredcomp.textio import parse_element, parse_poly


def examples():
    F2, F3 = make_field(2), make_field(3)
    p2 = lambda s: parse_poly(s, F2)  # noqa: E731
    p3 = lambda s: parse_poly(s, F3)  # noqa: E731
    F8 = extend(F2, 3)
    yield "theorem1", lambda v: C.theorem1_compose(p2("x^2+x+1"), 1, parse_element("y", F8), verify=v)
    yield "cohen", lambda v: C.cohen_compose(p2("x^2+x+1"), p2("x^2+x"), p2("1"), v)
    yield "varshamov r=3 n=3", lambda v: C.varshamov_construct(p2("x^3+x+1"), 3, v)
    yield "varshamov r=3 n=5", lambda v: C.varshamov_construct(p2("x^5+x^2+1"), 3, v)
    yield "ogm", lambda v: C.ogm_construct(p2("x^2+x+1"), v)
    yield "theorem3 n=2", lambda v: C.theorem3_construct(p2("x^2+x+1"), p2("x^3+x+1"), v)
    yield "theorem3 degree 93", lambda v: C.theorem3_construct(p2("x^3+x+1"), p2("x^5+x^4+x^2+x+1"), v)
    yield "cor-ci degree 93", lambda v: C.corollary_ci_construct(p2("x^3+x+1"), p2("x^5+x^4+x^2+x+1"), v)
    yield "cor-theta q=3", lambda v: C.corollary_theta_construct(p3("x^3+2x+2"), 2, v)
    yield "theorem5", lambda v: C.theorem5_construct(p2("x^2+x+1"), 1, 0, v)
    yield "theorem8", lambda v: C.theorem8_construct(p2("x^4+x+1"), 3, v)
    yield "theorem10", lambda v: C.theorem10_construct(p2("x^2+x+1"), v)
    yield "theorem11 q=2", lambda v: C.theorem11_construct(p2("x^2+x+1"), v)
    yield "theorem11 q=3", lambda v: C.theorem11_construct(p3("x^2+x+2"), v)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--verify", choices=C.VERIFY_LEVELS, default="fast")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    failures = 0
    for label, run in examples():
        try:
            rep = run(args.verify)
        except VerificationError as exc:
            rep = exc.report
            failures += 1
        print(f"== {label}: {rep.status}")
        print(rep.to_json() if args.json else rep.to_text())
        print()
    print(f"{failures} example(s) failed verification")
    return 0


if __name__ == "__main__":
    sys.exit(main())
