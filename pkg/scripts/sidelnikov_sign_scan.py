#!/usr/bin/env python3
"""Compare two sign conventions for the Sidelnikov primitivity criterion.

For each (w, x0, x1) over F_q the degree q-1 quotient is tested with Rabin and
compared against primitivity of (w+x0)/(w+x1) and of (w-x0)/(w-x1).

Usage: python scripts/sidelnikov_sign_scan.py [q ...]   (default 3 4 5 7 9 11)
"""

import itertools
import sys

from irredcomp import Felt, Poly, element_order, factor_group_order, is_irreducible, make_field
from irredcomp.polynomials import exact_div


def field_of_order(q):
    for p in (2, 3, 5, 7, 11, 13):
        s, r = 0, q
        while r % p == 0:
            r //= p
            s += 1
        if r == 1:
            return make_field(p, [s] if s > 1 else [])
    raise SystemExit(f"unsupported q={q}")


def primitive(r, fact, q):
    return bool(r) and element_order(r, fact) == q - 1


def scan(K):
    q = K.order
    fact = factor_group_order(q - 1)
    els = [Felt(K, v) for v in K.elements()]
    total = plus_bad = minus_bad = 0
    for w, a, b in itertools.product(els, repeat=3):
        if a == b or not (w - b) or not (w + b):
            continue
        num = Poly.monomial(K, q + 1) - Poly.monomial(K, q, w) - Poly.monomial(K, 1, a + b - w) + a * b
        f = exact_div(num, Poly.from_felts(K, (a * b, -(a + b), 1)))
        irr = True if f.degree < 1 else is_irreducible(f)
        total += 1
        plus_bad += primitive((w + a) / (w + b), fact, q) != irr
        minus_bad += primitive((w - a) / (w - b), fact, q) != irr
    return total, plus_bad, minus_bad


def main(argv):
    qs = [int(a) for a in argv] or [3, 4, 5, 7, 9, 11]
    print(f"{'q':>4} {'tuples':>8} {'plus-sign wrong':>16} {'minus-sign wrong':>17}")
    for q in qs:
        total, plus_bad, minus_bad = scan(field_of_order(q))
        print(f"{q:>4} {total:>8} {plus_bad:>16} {minus_bad:>17}")


if __name__ == "__main__":
    main(sys.argv[1:])
