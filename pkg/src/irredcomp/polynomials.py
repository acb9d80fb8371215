"""Dense univariate polynomials over one level of a field tower.

Coefficients are raw field values (see :mod:`irredcomp.fields`), lowest degree
first, with trailing zeros stripped.  Besides ring arithmetic the module holds
the coefficient-wise Frobenius twist, norm products down one tower level,
affine substitution, reciprocals and the conventional/linearized associates.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ContextError, PreconditionError, VerificationError
from .fields import Felt, FieldCtx, format_coeffs, set_degree

# degree of the zero polynomial
NEG_INF = float("-inf")
KARATSUBA_THRESHOLD = 64


class Poly:
    """Immutable dense polynomial over ``ctx``."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        c = list(coeffs)
        z = ctx.zero
        while c and c[-1] == z:
            c.pop()
        self.ctx = ctx
        self.coeffs = tuple(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def x(cls, ctx: FieldCtx) -> Poly:
        return cls(ctx, (ctx.zero, ctx.one))

    @classmethod
    def constant(cls, ctx: FieldCtx, c) -> Poly:
        return cls(ctx, (_value(ctx, c),))

    @classmethod
    def monomial(cls, ctx: FieldCtx, k: int, c=1) -> Poly:
        return cls(ctx, (ctx.zero,) * k + (_value(ctx, c),))

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Sequence[int]) -> Poly:
        """Coefficients given as integers, mapped into the prime subfield."""
        return cls(ctx, (ctx.scalar(n) for n in ints))

    @classmethod
    def from_exps(cls, ctx: FieldCtx, exps: Iterable[int]) -> Poly:
        """Sum of ``x^e`` over ``exps``."""
        exps = list(exps)
        if not exps:
            return cls(ctx)
        c = [ctx.zero] * (max(exps) + 1)
        for e in exps:
            c[e] = ctx.add(c[e], ctx.one)
        return cls(ctx, c)

    @classmethod
    def from_felts(cls, ctx: FieldCtx, felts: Iterable) -> Poly:
        return cls(ctx, (_value(ctx, a) for a in felts))

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, u: int):
        return self.coeffs[u] if 0 <= u < len(self.coeffs) else self.ctx.zero

    def coefficient(self, u: int) -> Felt:
        return Felt(self.ctx, self[u])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Felt)):
            return self == Poly.constant(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def sort_key(self):
        """Order by degree, then by coefficient indices from the top down."""
        ix = self.ctx.index
        return (len(self.coeffs), tuple(ix(c) for c in reversed(self.coeffs)))

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextError("polynomials over different fields")
            return other
        if isinstance(other, (int, Felt)):
            return Poly.constant(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly(self.ctx, _vadd(self.ctx, self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly(self.ctx, _vsub(self.ctx, self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        F = self.ctx
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Felt)):
            return self.scale(_value(self.ctx, other))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly(self.ctx, _mul(self.ctx, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        F = self.ctx
        c = _value(F, c)
        return Poly(F, (F.mul(c, a) for a in self.coeffs))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        return divrem(self, self._other(other))

    def __floordiv__(self, other):
        return divrem(self, self._other(other))[0]

    def __mod__(self, other):
        return divrem(self, self._other(other))[1]

    def __call__(self, a):
        return evaluate(self, a)

    def monic(self) -> Poly:
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no monic associate")
        if self.is_monic():
            return self
        return self.scale(self.ctx.inv(self.lead))

    def shift(self, k: int) -> Poly:
        """Multiply by ``x^k``."""
        if not self.coeffs:
            return self
        return Poly(self.ctx, (self.ctx.zero,) * k + self.coeffs)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r} over {self.ctx.descriptor()})"


def _value(ctx: FieldCtx, c):
    if isinstance(c, int):
        return ctx.scalar(c)
    if isinstance(c, Felt):
        return Felt.of(ctx, c).value
    ctx.check(c)
    return c


# ---------------------------------------------------------------------------
# coefficient-list kernels


def _vadd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = F.add
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return out


def _vsub(F, a, b):
    out = list(a) + [F.zero] * (len(b) - len(a))
    sub = F.sub
    for i, c in enumerate(b):
        out[i] = sub(out[i], c)
    return out


def _school(F, a, b):
    if not a or not b:
        return []
    if not F.chain:
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return [c % p for c in out]
    z = F.zero
    add, mul = F.add, F.mul
    out = [z] * (len(a) + len(b) - 1)
    nz_b = [(j, bj) for j, bj in enumerate(b) if bj != z]
    for i, ai in enumerate(a):
        if ai == z:
            continue
        for j, bj in nz_b:
            out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def _mul(F, a, b):
    if min(len(a), len(b)) < KARATSUBA_THRESHOLD:
        return _school(F, a, b)
    m = max(len(a), len(b)) // 2
    a0, a1 = list(a[:m]), list(a[m:])
    b0, b1 = list(b[:m]), list(b[m:])
    z0 = _mul(F, a0, b0)
    z2 = _mul(F, a1, b1)
    z1 = _vsub(F, _vsub(F, _mul(F, _vadd(F, a0, a1), _vadd(F, b0, b1)), z0), z2)
    out = [F.zero] * (len(a) + len(b) - 1)
    add = F.add
    for off, part in ((0, z0), (m, z1), (2 * m, z2)):
        for i, c in enumerate(part):
            if i + off < len(out):
                out[i + off] = add(out[i + off], c)
    return out


def _divrem(F, a, b):
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    z = F.zero
    r = list(a)
    q = [z] * (len(a) - db)
    monic = b[-1] == F.one
    inv = None if monic else F.inv(b[-1])
    if not F.chain:
        p = F.p
        for k in range(len(a) - 1, db - 1, -1):
            c = r[k] % p
            if not c:
                continue
            if not monic:
                c = c * inv % p
            q[k - db] = c
            base = k - db
            for i in range(db):
                if b[i]:
                    r[base + i] -= c * b[i]
        return q, [c % p for c in r[:db]]
    sub, mul = F.sub, F.mul
    nz_b = [(i, bi) for i, bi in enumerate(b[:db]) if bi != z]
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c == z:
            continue
        if not monic:
            c = mul(c, inv)
        q[k - db] = c
        base = k - db
        for i, bi in nz_b:
            r[base + i] = sub(r[base + i], mul(c, bi))
    return q, r[:db]


# ---------------------------------------------------------------------------
# ring operations


def _same(*polys: Poly) -> FieldCtx:
    ctx = polys[0].ctx
    for p in polys[1:]:
        if p.ctx != ctx:
            raise ContextError("polynomials over different fields")
    return ctx


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with ``deg r < deg b``."""
    F = _same(a, b)
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = _divrem(F, a.coeffs, b.coeffs)
    return Poly(F, q), Poly(F, r)


def exact_div(a: Poly, b: Poly, what: str = "division") -> Poly:
    """Quotient of a division the caller knows to be exact."""
    q, r = divrem(a, b)
    if r:
        raise VerificationError(f"{what} left nonzero remainder {r}")
    return q


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    F = _same(a, b)
    x, y = a.coeffs, b.coeffs
    while y:
        x, y = y, _divrem(F, x, y)[1]
        y = Poly(F, y).coeffs
    g = Poly(F, x)
    return g.monic() if g else g


def powmod(p: Poly, e: int, m: Poly) -> Poly:
    """``p^e mod m`` by square-and-multiply."""
    F = _same(p, m)
    if m.degree < 1:
        raise PreconditionError("modulus must be nonconstant")
    if e < 0:
        raise ValueError("negative exponent")
    mc = m.coeffs
    base = _divrem(F, p.coeffs, mc)[1]
    result = [F.one]
    while e:
        if e & 1:
            result = _divrem(F, _mul(F, result, base), mc)[1]
        e >>= 1
        if e:
            base = _divrem(F, _mul(F, base, base), mc)[1]
    return Poly(F, result)


def compose_mod(outer: Poly, inner: Poly, m: Poly | None = None) -> Poly:
    """``outer(inner)``, reduced modulo ``m`` when given (Horner scheme)."""
    F = _same(outer, inner) if m is None else _same(outer, inner, m)
    inner_c = inner.coeffs if m is None else _divrem(F, inner.coeffs, m.coeffs)[1]
    acc: list = []
    for c in reversed(outer.coeffs):
        acc = _vadd(F, _mul(F, acc, inner_c), [c])
        if m is not None:
            acc = _divrem(F, acc, m.coeffs)[1]
    return Poly(F, acc)


def homogenize(coeffs: Poly, num: Poly, den: Poly) -> Poly:
    """``den^n * P(num/den)`` for ``P = coeffs`` of degree ``n``.

    Expanded as ``sum P_i num^i den^(n-i)``, the polynomial numerator of a
    rational substitution.
    """
    F = _same(coeffs, num, den)
    n = coeffs.degree
    if n == NEG_INF:
        return Poly(F)
    num_pows = [Poly.constant(F, 1)]
    for _ in range(n):
        num_pows.append(num_pows[-1] * num)
    total = Poly(F)
    den_pow = Poly.constant(F, 1)
    for i in range(n, -1, -1):
        if coeffs[i] != F.zero:
            total = total + (num_pows[i] * den_pow).scale(coeffs[i])
        den_pow = den_pow * den
    return total


# ---------------------------------------------------------------------------
# tower moves


def lift(p: Poly, ctx: FieldCtx) -> Poly:
    """Embed the coefficients of ``p`` into the extension level ``ctx``."""
    if p.ctx == ctx:
        return p
    return Poly(ctx, (ctx.embed(c, p.ctx) for c in p.coeffs))


def descend(p: Poly, ctx: FieldCtx) -> Poly:
    """Re-express ``p`` over the lower level ``ctx``; fails if not possible."""
    if p.ctx == ctx:
        return p
    return Poly(ctx, (p.ctx.descend(c, ctx) for c in p.coeffs))


def _join(a: FieldCtx, b: FieldCtx) -> FieldCtx:
    if a.is_ancestor(b):
        return a
    if b.is_ancestor(a):
        return b
    raise ContextError("fields are not levels of one tower")


def affine_compose(f: Poly, alpha, beta) -> Poly:
    """``f(alpha x + beta)`` over the field of ``alpha`` and ``beta``."""
    L = f.ctx
    for c in (alpha, beta):
        if isinstance(c, Felt):
            L = _join(L, c.ctx)
    a = Felt.of(L, alpha)
    if not a:
        raise PreconditionError("alpha must be nonzero")
    b = Felt.of(L, beta)
    return compose_mod(lift(f, L), Poly(L, (b.value, a.value)))


def frobenius_twist(g: Poly, a: int) -> Poly:
    """Apply ``c -> c^(q^a)`` to every coefficient."""
    F = g.ctx
    return Poly(F, (F.frob(c, a) for c in g.coeffs))


def norm_product(g: Poly, d: int) -> Poly:
    """Product of the ``d`` Frobenius twists of ``g``, over the base level."""
    L = g.ctx
    if not L.chain:
        if d != 1:
            raise PreconditionError("a prime field has no proper base")
        return g
    if d != L.degree:
        raise PreconditionError(f"d={d} differs from the tower degree {L.degree}")
    prod = g
    for v in range(1, d):
        prod = prod * frobenius_twist(g, v)
    for c in prod.coeffs:
        if L.frob(c, 1) != c or not L.in_base(c):
            raise VerificationError("norm product coefficient not fixed by Frobenius")
    return descend(prod, L.base)


def coeff_set_degree(g: Poly) -> int:
    return set_degree([g.coefficient(u) for u in range(len(g.coeffs))] or [Felt(g.ctx, g.ctx.zero)])


def reciprocal(h: Poly) -> Poly:
    """``x^n h(1/x)`` for ``n = deg h``."""
    return Poly(h.ctx, reversed(h.coeffs))


def to_linearized(lbar: Poly) -> Poly:
    """``sum a_i x^i  ->  sum a_i x^(q^i)`` with ``q = |ctx|``."""
    F = lbar.ctx
    q = F.order
    if not lbar.coeffs:
        return lbar
    out = [F.zero] * (q ** (len(lbar.coeffs) - 1) + 1)
    for i, c in enumerate(lbar.coeffs):
        out[q**i] = c
    return Poly(F, out)


def to_conventional(lin: Poly) -> Poly:
    """Inverse of :func:`to_linearized`."""
    F = lin.ctx
    q = F.order
    out = []
    e = 1
    support = {u for u, c in enumerate(lin.coeffs) if c != F.zero}
    while support:
        out.append(lin[e])
        support.discard(e)
        e *= q
        if support and e > max(support):
            bad = min(support)
            raise PreconditionError(f"exponent {bad} is not a power of {q}")
    return Poly(F, out)


def evaluate(p: Poly, a) -> Felt:
    """Horner evaluation, embedding into the larger of the two fields."""
    if isinstance(a, Felt):
        L = _join(p.ctx, a.ctx)
        av = Felt.of(L, a).value
    else:
        L = p.ctx
        av = _value(L, a)
    acc = L.zero
    for c in reversed(lift(p, L).coeffs):
        acc = L.add(L.mul(acc, av), c)
    return Felt(L, acc)


# ---------------------------------------------------------------------------
# text


def format_poly(p: Poly, var: str = "x") -> str:
    return format_coeffs(p.ctx, p.coeffs, var)


def format_exps(p: Poly) -> str:
    """Compact ``exps:[...]`` form; only for 0/1 coefficients."""
    F = p.ctx
    if any(c not in (F.zero, F.one) for c in p.coeffs):
        raise ValueError("exps format needs every coefficient to be 0 or 1")
    exps = [u for u in range(len(p.coeffs) - 1, -1, -1) if p.coeffs[u] == F.one]
    return "exps:[" + ",".join(map(str, exps)) + "]"
