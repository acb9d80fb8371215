"""Parsing of polynomial, element and field-descriptor text.

Printing lives next to the types (:func:`irredcomp.polynomials.format_poly`,
:meth:`irredcomp.fields.FieldCtx.descriptor`); this module is its inverse.

Grammar (whitespace is ignored)::

    poly  := ['-'] term (('+' | '-') term)*
    term  := coef ['*'] atom | atom | coef
    coef  := INT | '(' element ')'
    atom  := VAR ['^' INT]

An ``element`` of level ``i >= 1`` is itself a polynomial in that level's
generator (``y``, ``z``, ...) over level ``i - 1``.
"""

from __future__ import annotations

import re

from .errors import ParseError, PreconditionError
from .fields import VARS, Felt, FieldCtx, extend, is_prime, make_field
from .polynomials import Poly, divrem

_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*(?:\[\s*chain\s*:(.*)\]\s*)?$")
_EXPS_RE = re.compile(r"^\s*exps\s*:\s*\[([\d\s,]*)\]\s*$")


class _Parser:
    def __init__(self, text: str, ctx: FieldCtx, var: str):
        self.text = text
        self.s = text
        self.i = 0
        self.ctx = ctx
        self.var = var

    def error(self, msg):
        raise ParseError(msg, self.text, self.i)

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def integer(self) -> int:
        self.skip()
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected an integer")
        return int(self.s[j : self.i])

    def poly(self, closing: str = "") -> dict[int, object]:
        F = self.ctx
        terms: dict[int, object] = {}
        sign = 1
        if self.peek() == "-":
            self.i += 1
            sign = -1
        while True:
            e, c = self.term()
            if sign < 0:
                c = F.neg(c)
            terms[e] = F.add(terms.get(e, F.zero), c)
            ch = self.peek()
            if ch in ("+", "-"):
                sign = 1 if ch == "+" else -1
                self.i += 1
                continue
            if ch == closing:
                return terms
            self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")

    def term(self):
        F = self.ctx
        ch = self.peek()
        coef = None
        if ch.isdigit():
            start = self.i
            n = self.integer()
            if n >= F.p:
                self.i = start
                self.error(f"coefficient {n} invalid in characteristic {F.p}")
            coef = F.scalar(n)
        elif ch == "(":
            if not F.chain:
                self.error("parenthesized coefficient in a prime field")
            self.i += 1
            inner = _Parser(self.s, F.base, F.var)
            inner.text = self.text
            inner.i = self.i
            coef = _reduce(F, inner.poly(closing=")"))
            self.i = inner.i + 1
        if self.peek() == "*":
            self.i += 1
        if self.s.startswith(self.var, self.i) and self.var:
            self.i += len(self.var)
            e = 1
            if self.peek() == "^":
                self.i += 1
                e = self.integer()
            return e, F.one if coef is None else coef
        if coef is None:
            self.error("expected a term")
        return 0, coef


def _reduce(F: FieldCtx, terms: dict[int, object]):
    """Field element of ``F`` from a polynomial (in F's generator) over the base."""
    B = F.base
    deg = max(terms, default=0)
    coeffs = [terms.get(u, B.zero) for u in range(deg + 1)]
    r = divrem(Poly(B, coeffs), Poly(B, F.chain[-1]))[1]
    return tuple(r[u] for u in range(F.degree))


def parse_poly(text: str, ctx: FieldCtx, var: str = "x") -> Poly:
    """Parse the polynomial text format or the ``exps:[...]`` form."""
    m = _EXPS_RE.match(text)
    if m:
        body = m.group(1).strip()
        exps = [int(t) for t in body.split(",") if t.strip()] if body else []
        if len(set(exps)) != len(exps):
            raise ParseError("repeated exponent in exps list", text)
        return Poly.from_exps(ctx, exps)
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    p = _Parser(text, ctx, var)
    terms = p.poly()
    if p.i < len(p.s.rstrip()):
        p.error("trailing characters")
    deg = max(terms, default=0)
    return Poly(ctx, [terms.get(u, ctx.zero) for u in range(deg + 1)])


def parse_element(text: str, ctx: FieldCtx) -> Felt:
    """Parse an element of ``ctx``: an integer, or a polynomial in its generator."""
    if not ctx.chain:
        t = text.strip()
        neg = t.startswith("-")
        body = t[1:].strip() if neg else t
        if not body.isdigit():
            raise ParseError("expected an integer", text, 0)
        n = int(body)
        if n >= ctx.p:
            raise ParseError(f"element {n} invalid in characteristic {ctx.p}", text, 0)
        return Felt(ctx, ctx.scalar(-n if neg else n))
    p = _Parser(text, ctx.base, ctx.var)
    terms = p.poly()
    if p.i < len(p.s.rstrip()):
        p.error("trailing characters")
    return Felt(ctx, _reduce(ctx, terms))


def parse_field(text: str) -> FieldCtx:
    """Parse ``GF(p)``, ``GF(p^s)``, ``GF(q)`` or ``GF(p^s)[chain: m0; m1; ...]``."""
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError("malformed field descriptor", text)
    base, exp, chain = m.group(1), m.group(2), m.group(3)
    p, s = int(base), int(exp) if exp else 1
    if exp is None and not is_prime(p):
        # GF(q) with q a prime power
        for cand in range(2, p + 1):
            if p % cand == 0:
                break
        r, s = p, 0
        while r % cand == 0:
            r //= cand
            s += 1
        if r != 1:
            raise PreconditionError(f"{p} is not a prime power")
        p = cand
    if not is_prime(p):
        raise PreconditionError(f"characteristic {p} is not prime")
    if chain is None:
        return make_field(p, [s] if s > 1 else [])
    ctx = FieldCtx(p)
    for i, part in enumerate(x for x in chain.split(";") if x.strip()):
        mod = parse_poly(part, ctx, VARS[i])
        if not mod.is_monic():
            raise PreconditionError(f"modulus {part.strip()!r} is not monic")
        ctx = extend(ctx, mod.degree, mod.coeffs)
    if ctx.absolute_degree != s:
        raise PreconditionError(
            f"chain has total degree {ctx.absolute_degree}, descriptor says {s}"
        )
    return ctx
