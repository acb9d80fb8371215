#!/usr/bin/env python3
"""Check the degree n(q^n - 1) rational composition for every primitive f.

Prints, per (q, n), how many primitive f give an irreducible output. In
characteristic 2 the answer is all of them; in odd characteristic it is none.

Usage: python scripts/odd_char_composition_scan.py
"""

from irredcomp import enumerate_irreducibles, make_field
from irredcomp.constructions import theorem11_construct
from irredcomp.errors import VerificationError

CASES = [(2, [], 2), (2, [], 3), (2, [2], 1), (2, [2], 2), (3, [], 1), (3, [], 2), (5, [], 1), (7, [], 1), (3, [], 3)]


def main():
    print(f"{'field':<28} {'n':>2} {'primitive f':>12} {'irreducible':>12}")
    for p, chain, n in CASES:
        K = make_field(p, chain)
        ok = total = 0
        for f in enumerate_irreducibles(K, n, primitive=True):
            if n == 1 and f.coeffs[0] == K.neg(K.one):
                continue  # x - 1 is excluded
            total += 1
            try:
                theorem11_construct(f)
                ok += 1
            except VerificationError:
                pass
        print(f"{K.descriptor():<28} {n:>2} {total:>12} {ok:>12}")


if __name__ == "__main__":
    main()
