"""Exact arithmetic in prime fields and in towers of extensions.

A field is described by a characteristic ``p`` and a modulus chain.
``chain[0]`` is a monic irreducible polynomial over F_p defining
F_q = F_p[y]/(chain[0]); ``chain[1]`` is monic irreducible over F_q and
defines F_{q^k} = F_q[z]/(chain[1]), and so on.  Each prefix of the chain is
itself a field (a *level*); the immediate prefix is the ``base``.

Elements are stored as raw values: an ``int`` in ``range(p)`` at level 0 and
a tuple of base-level raw values (constant coordinate first, fixed length
equal to the relative degree) above it.  Raw values are canonical, so
equality of values is equality of elements.  :class:`Felt` wraps a raw value
together with its field for operator-style use.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Iterator, Sequence

from .errors import ContextError, FactorizationRangeError, PreconditionError

VARS = "yzwvuts"
DEFAULT_TRIAL_BOUND = 2**20
# fields up to this size get log/antilog tables
TABLE_LIMIT = 1 << 13


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def trial_bound() -> int:
    """Trial-division bound, overridable through ``GALOIS_TRIAL_BOUND``."""
    env = os.environ.get("GALOIS_TRIAL_BOUND")
    return int(env) if env else DEFAULT_TRIAL_BOUND


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_divisors(n: int) -> list[int]:
    return [ell for ell, _ in factor_group_order(n).prime_factors]


def mobius(n: int) -> int:
    result = 1
    for _, mult in factor_group_order(n).prime_factors:
        if mult > 1:
            return 0
        result = -result
    return result


def multiplicative_order(a: int, m: int) -> int:
    """Order of ``a`` in (Z/mZ)^*."""
    if math.gcd(a, m) != 1:
        raise PreconditionError(f"{a} is not invertible modulo {m}")
    o, x = 1, a % m
    while x != 1 % m:
        x = x * a % m
        o += 1
    return o


@dataclass(frozen=True)
class OrderFactorization:
    """Complete factorization of a group order ``N``."""

    modulus_of_group: int
    prime_factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        for ell, mult in self.prime_factors:
            if not is_prime(ell) or mult < 1:
                raise ValueError(f"invalid prime power {ell}^{mult}")
            prod *= ell**mult
        if prod != self.modulus_of_group:
            raise ValueError("prime factors do not multiply to the group order")

    @property
    def primes(self) -> list[int]:
        return [ell for ell, _ in self.prime_factors]


@lru_cache(maxsize=None)
def _factor(N: int, bound: int) -> OrderFactorization:
    if N < 1:
        raise PreconditionError("group order must be positive")
    found = []
    rest = N
    d = 2
    while d <= bound and d * d <= rest:
        if rest % d == 0:
            mult = 0
            while rest % d == 0:
                rest //= d
                mult += 1
            found.append((d, mult))
        d += 1 if d == 2 else 2
    if rest > 1:
        # every prime factor <= bound has been removed
        if d * d <= rest and rest > bound * bound:
            raise FactorizationRangeError(
                f"factorization out of desk range: cofactor {rest} of {N} "
                f"exceeds trial-division bound {bound}"
            )
        found.append((rest, 1))
    return OrderFactorization(N, tuple(sorted(found)))


def factor_group_order(N: int, bound: int | None = None) -> OrderFactorization:
    """Factor ``N`` by trial division up to ``bound`` (default 2^20)."""
    return _factor(N, trial_bound() if bound is None else bound)


# ---------------------------------------------------------------------------
# fields

_VERIFIED: set = set()


@dataclass(frozen=True)
class FieldCtx:
    """Immutable description of one level of a field tower."""

    p: int
    chain: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(tuple(m) for m in self.chain))
        key = (self.p, self.chain)
        if key in _VERIFIED:
            return
        if not is_prime(self.p):
            raise PreconditionError(f"characteristic {self.p} is not prime")
        from .classify import is_irreducible
        from .polynomials import Poly

        for i, m in enumerate(self.chain):
            lower = FieldCtx(self.p, self.chain[:i])
            if len(m) < 2:
                raise PreconditionError(f"chain modulus #{i} has degree < 1")
            for c in m:
                lower.check(c)
            if m[-1] != lower.one:
                raise PreconditionError(f"chain modulus #{i} is not monic")
            if not is_irreducible(Poly(lower, m)):
                raise PreconditionError(
                    f"modulus {format_coeffs(lower, m, VARS[i])} is reducible"
                )
        _VERIFIED.add(key)

    # -- structure ----------------------------------------------------------

    @cached_property
    def level(self) -> int:
        return len(self.chain)

    @cached_property
    def base(self) -> FieldCtx | None:
        return FieldCtx(self.p, self.chain[:-1]) if self.chain else None

    @cached_property
    def degree(self) -> int:
        """Degree over the base level (1 for a prime field)."""
        return len(self.chain[-1]) - 1 if self.chain else 1

    @cached_property
    def absolute_degree(self) -> int:
        return math.prod(len(m) - 1 for m in self.chain)

    @cached_property
    def order(self) -> int:
        return self.p**self.absolute_degree

    @cached_property
    def base_order(self) -> int:
        return self.base.order if self.base is not None else self.p

    @cached_property
    def zero(self):
        return 0 if not self.chain else (self.base.zero,) * self.degree

    @cached_property
    def one(self):
        return 1 if not self.chain else self.lift(self.base.one)

    def ancestor(self, level: int) -> FieldCtx:
        if not 0 <= level <= self.level:
            raise ContextError(f"no level {level} below level {self.level}")
        return self if level == self.level else FieldCtx(self.p, self.chain[:level])

    def is_ancestor(self, other: FieldCtx) -> bool:
        """True if ``other`` is this field or one of its lower levels."""
        return other.p == self.p and self.chain[: other.level] == other.chain

    @property
    def var(self) -> str:
        """Name of the generator of this level over its base."""
        return VARS[self.level - 1] if self.chain else ""

    # -- values -------------------------------------------------------------

    def check(self, v) -> None:
        if not self.chain:
            if not isinstance(v, int) or not 0 <= v < self.p:
                raise ContextError(f"{v!r} is not an element of GF({self.p})")
            return
        if not isinstance(v, tuple) or len(v) != self.degree:
            raise ContextError(f"{v!r} is not a level-{self.level} value")
        for c in v:
            self.base.check(c)

    def element(self, index: int):
        """Element with enumeration index ``index`` (base-q digits, constant first)."""
        if not self.chain:
            return index % self.p
        q = self.base.order
        digits = []
        for _ in range(self.degree):
            index, r = divmod(index, q)
            digits.append(self.base.element(r))
        return tuple(digits)

    def index(self, v) -> int:
        if not self.chain:
            return v
        q = self.base.order
        return sum(self.base.index(c) * q**i for i, c in enumerate(v))

    def elements(self) -> Iterator:
        for i in range(self.order):
            yield self.element(i)

    def scalar(self, n: int):
        """The image of the integer ``n`` in this field."""
        if not self.chain:
            return n % self.p
        return self.lift(self.base.scalar(n))

    def lift(self, v):
        """Embed a base-level value."""
        return (v,) + (self.base.zero,) * (self.degree - 1)

    def embed(self, v, src: FieldCtx):
        if not self.is_ancestor(src):
            raise ContextError("source field is not a subfield level of this field")
        for lvl in range(src.level + 1, self.level + 1):
            v = self.ancestor(lvl).lift(v)
        return v

    def in_base(self, v) -> bool:
        if not self.chain:
            return True
        z = self.base.zero
        return all(c == z for c in v[1:])

    def drop(self, v):
        """Inverse of :meth:`lift`; refuses values outside the base."""
        if not self.in_base(v):
            raise ContextError("value does not lie in the base field")
        return v[0]

    def descend(self, v, target: FieldCtx):
        if not self.is_ancestor(target):
            raise ContextError("target is not a subfield level of this field")
        ctx = self
        while ctx.level > target.level:
            v = ctx.drop(v)
            ctx = ctx.base
        return v

    def in_prime_field(self, v) -> bool:
        ctx = self
        while ctx.chain:
            if not ctx.in_base(v):
                return False
            v = v[0]
            ctx = ctx.base
        return True

    def flatten(self, v) -> tuple[int, ...]:
        """Coordinates over F_p, lowest level fastest."""
        if not self.chain:
            return (v,)
        return tuple(x for c in v for x in self.base.flatten(c))

    def unflatten(self, coords: Sequence[int]):
        if not self.chain:
            (c,) = coords
            return c % self.p
        w = self.base.absolute_degree
        if len(coords) != w * self.degree:
            raise ContextError("wrong number of coordinates")
        return tuple(
            self.base.unflatten(coords[i * w : (i + 1) * w]) for i in range(self.degree)
        )

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if not self.chain:
            return (a + b) % self.p
        if self.level == 1:
            p = self.p
            return tuple((x + y) % p for x, y in zip(a, b))
        badd = self.base.add
        return tuple(badd(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if not self.chain:
            return (a - b) % self.p
        if self.level == 1:
            p = self.p
            return tuple((x - y) % p for x, y in zip(a, b))
        bsub = self.base.sub
        return tuple(bsub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if not self.chain:
            return -a % self.p
        bneg = self.base.neg
        return tuple(bneg(x) for x in a)

    def mul(self, a, b):
        if not self.chain:
            return a * b % self.p
        tables = self._tables
        if tables is None:
            return self._mul_generic(a, b)
        z = self.zero
        if a == z or b == z:
            return z
        exp, log = tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if not self.chain:
            return pow(a, -1, self.p)
        tables = self._tables
        if tables is None:
            return self._pow_generic(a, self.order - 2)
        exp, log = tables
        return exp[-log[a] % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if not self.chain:
            return pow(a, e, self.p)
        if a == self.zero:
            return self.one if e == 0 else self.zero
        tables = self._tables
        if tables is None:
            return self._pow_generic(a, e % (self.order - 1))
        exp, log = tables
        return exp[log[a] * e % (self.order - 1)]

    def frob(self, a, e: int = 1):
        """``a^(q^e)`` for the base cardinality ``q``, by repeated q-th powering."""
        if e < 0:
            raise ValueError("negative Frobenius exponent")
        q = self.base_order
        for _ in range(e % self.degree):
            a = self.pow(a, q)
        return a

    def _mul_generic(self, a, b):
        B = self.base
        s = self.degree
        bz = B.zero
        badd, bmul, bsub = B.add, B.mul, B.sub
        prod = [bz] * (2 * s - 1)
        for i, ai in enumerate(a):
            if ai == bz:
                continue
            for j, bj in enumerate(b):
                if bj != bz:
                    prod[i + j] = badd(prod[i + j], bmul(ai, bj))
        m = self.chain[-1]
        for k in range(2 * s - 2, s - 1, -1):
            c = prod[k]
            if c == bz:
                continue
            for i in range(s):
                if m[i] != bz:
                    prod[k - s + i] = bsub(prod[k - s + i], bmul(c, m[i]))
        return tuple(prod[:s])

    def _pow_generic(self, a, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self._mul_generic(result, a)
            a = self._mul_generic(a, a)
            e >>= 1
        return result

    @cached_property
    def _tables(self):
        if not self.chain or self.order > TABLE_LIMIT:
            return None
        return _build_tables(self)

    # -- text ---------------------------------------------------------------

    def format(self, v) -> str:
        if not self.chain:
            return str(v)
        return format_coeffs(self.base, v, self.var)

    def descriptor(self) -> str:
        if not self.chain:
            return f"GF({self.p})"
        moduli = "; ".join(
            format_coeffs(self.ancestor(i), m, VARS[i]) for i, m in enumerate(self.chain)
        )
        return f"GF({self.p}^{self.absolute_degree})[chain: {moduli}]"

    def __repr__(self):
        return self.descriptor()


_TABLES: dict = {}


def _build_tables(ctx: FieldCtx):
    key = (ctx.p, ctx.chain)
    if key in _TABLES:
        return _TABLES[key]
    N = ctx.order - 1
    primes = factor_group_order(N).primes
    for idx in range(1, ctx.order):
        g = ctx.element(idx)
        if all(ctx._pow_generic(g, N // ell) != ctx.one for ell in primes):
            break
    exp = []
    x = ctx.one
    for _ in range(N):
        exp.append(x)
        x = ctx._mul_generic(x, g)
    log = {v: i for i, v in enumerate(exp)}
    _TABLES[key] = (exp, log)
    return exp, log


def format_coeffs(ctx: FieldCtx, coeffs: Sequence, var: str) -> str:
    """Render ``sum coeffs[u] var^u`` in decreasing exponent order."""
    terms = []
    for u in range(len(coeffs) - 1, -1, -1):
        c = coeffs[u]
        if c == ctx.zero:
            continue
        if ctx.in_prime_field(c):
            n = ctx.descend(c, ctx.ancestor(0))
            ctext = "" if (n == 1 and u > 0) else str(n)
        else:
            ctext = f"({ctx.format(c)})"
        atom = "" if u == 0 else (var if u == 1 else f"{var}^{u}")
        terms.append(ctext + atom)
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# field elements


@dataclass(frozen=True)
class Felt:
    """A field element bound to its field."""

    ctx: FieldCtx
    value: object

    @classmethod
    def of(cls, ctx: FieldCtx, x) -> Felt:
        """Coerce an int (prime-field image), raw value or Felt into ``ctx``."""
        if isinstance(x, Felt):
            return cls(ctx, _embed_value(ctx, x))
        if isinstance(x, int):
            return cls(ctx, ctx.scalar(x))
        ctx.check(x)
        return cls(ctx, x)

    def _pair(self, other):
        if isinstance(other, int):
            return self.ctx, self.value, self.ctx.scalar(other)
        if not isinstance(other, Felt):
            return None
        if other.ctx == self.ctx:
            return self.ctx, self.value, other.value
        if self.ctx.is_ancestor(other.ctx):
            return self.ctx, self.value, self.ctx.embed(other.value, other.ctx)
        if other.ctx.is_ancestor(self.ctx):
            return other.ctx, other.ctx.embed(self.value, self.ctx), other.value
        raise ContextError("elements of unrelated fields")

    def _binop(self, other, op, swap=False):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        ctx, a, b = pair
        if swap:
            a, b = b, a
        return Felt(ctx, getattr(ctx, op)(a, b))

    def __add__(self, other):
        return self._binop(other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, "sub")

    def __rsub__(self, other):
        return self._binop(other, "sub", swap=True)

    def __mul__(self, other):
        return self._binop(other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, "div")

    def __rtruediv__(self, other):
        return self._binop(other, "div", swap=True)

    def __neg__(self):
        return Felt(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return Felt(self.ctx, self.ctx.pow(self.value, e))

    def __eq__(self, other):
        try:
            pair = self._pair(other)
        except ContextError:
            return False
        if pair is None:
            return NotImplemented
        return pair[1] == pair[2]

    def __hash__(self):
        # equal elements of different levels must hash alike
        ctx, v = self.ctx, self.value
        while ctx.chain and ctx.in_base(v):
            ctx, v = ctx.base, v[0]
        return hash(v) if not ctx.chain else hash((ctx, v))

    def __bool__(self):
        return self.value != self.ctx.zero

    def inverse(self) -> Felt:
        return Felt(self.ctx, self.ctx.inv(self.value))

    def frobenius(self, e: int = 1) -> Felt:
        return frobenius(self, e)

    def __str__(self):
        return self.ctx.format(self.value)

    def __repr__(self):
        return f"Felt({self.ctx.format(self.value)!r} in {self.ctx.descriptor()})"


def _embed_value(ctx: FieldCtx, a: Felt):
    if a.ctx == ctx:
        return a.value
    if ctx.is_ancestor(a.ctx):
        return ctx.embed(a.value, a.ctx)
    if a.ctx.is_ancestor(ctx):
        return a.ctx.descend(a.value, ctx)
    raise ContextError("element belongs to an unrelated field")


# ---------------------------------------------------------------------------
# construction of fields


@lru_cache(maxsize=None)
def default_modulus(ctx: FieldCtx, k: int) -> tuple:
    """Least monic irreducible of degree ``k`` over ``ctx``.

    Candidates are enumerated by the integer ``sum index(c_u) * Q^u`` of their
    lower coefficients, i.e. counting upward from the constant term.
    """
    from .classify import is_irreducible
    from .polynomials import Poly

    if k < 1:
        raise PreconditionError("extension degree must be >= 1")
    Q = ctx.order
    for idx in range(Q**k):
        lower = []
        for _ in range(k):
            idx, r = divmod(idx, Q)
            lower.append(ctx.element(r))
        if k > 1 and lower[0] == ctx.zero:
            continue
        cand = tuple(lower) + (ctx.one,)
        if is_irreducible(Poly(ctx, cand)):
            return cand
    raise AssertionError("no irreducible polynomial found")  # impossible


def _modulus_values(ctx: FieldCtx, m) -> tuple:
    coeffs = m.coeffs if hasattr(m, "coeffs") else m
    vals = tuple(ctx.check(c) or c for c in coeffs)
    return vals


@lru_cache(maxsize=None)
def extend(ctx: FieldCtx, k: int, modulus: tuple | None = None) -> FieldCtx:
    """Adjoin one tower level of degree ``k`` on top of ``ctx``."""
    if modulus is None:
        modulus = default_modulus(ctx, k)
    else:
        modulus = _modulus_values(ctx, modulus)
        if len(modulus) - 1 != k:
            raise PreconditionError(
                f"modulus has degree {len(modulus) - 1}, expected {k}"
            )
    return FieldCtx(ctx.p, ctx.chain + (modulus,))


def make_field(p: int, chain_degrees: Sequence[int] = (), chain_overrides=None) -> FieldCtx:
    """Build F_p and then one tower level per entry of ``chain_degrees``.

    ``chain_overrides`` may give explicit moduli (``None`` entries fall back to
    the default choice).
    """
    if not is_prime(p):
        raise PreconditionError(f"characteristic {p} is not prime")
    ctx = FieldCtx(p)
    overrides = list(chain_overrides or [])
    for i, k in enumerate(chain_degrees):
        if k < 1:
            raise PreconditionError("extension degree must be >= 1")
        m = overrides[i] if i < len(overrides) else None
        if m is not None:
            m = _modulus_values(ctx, m)
        ctx = extend(ctx, k, m)
    return ctx


# ---------------------------------------------------------------------------
# element-level operations


def frobenius(a: Felt, e: int) -> Felt:
    """``a^(q^e)`` where ``q`` is the cardinality of the base level of ``a``."""
    return Felt(a.ctx, a.ctx.frob(a.value, e))


def element_degree(a: Felt) -> int:
    """Least ``d`` dividing the relative degree with ``a^(q^d) = a``."""
    ctx = a.ctx
    for d in divisors(ctx.degree):
        if ctx.frob(a.value, d) == a.value:
            return d
    raise AssertionError("Frobenius order must divide the extension degree")


def set_degree(elems: Sequence[Felt]) -> int:
    """Degree over the base of the field generated by ``elems``."""
    if not elems:
        raise PreconditionError("set_degree of an empty list")
    ctx = elems[0].ctx
    degs = [element_degree(Felt.of(ctx, a)) for a in elems]
    return reduce(math.lcm, degs, 1)


def element_order(a: Felt, fact: OrderFactorization | None = None) -> int:
    """Multiplicative order of ``a``, by descent over the divisors of ``N``.

    ``fact`` factors some ``N`` dividing ``|F| - 1`` with ``a^N = 1``; by
    default ``N = |F| - 1``.
    """
    ctx = a.ctx
    if a.value == ctx.zero:
        raise PreconditionError("zero has no multiplicative order")
    if fact is None:
        fact = factor_group_order(ctx.order - 1)
    N = fact.modulus_of_group
    if (ctx.order - 1) % N or ctx.pow(a.value, N) != ctx.one:
        raise PreconditionError(f"factorization of {N} inconsistent with the element's group")
    e = N
    for ell, mult in fact.prime_factors:
        for _ in range(mult):
            if ctx.pow(a.value, e // ell) == ctx.one:
                e //= ell
            else:
                break
    return e


def is_primitive_element(a: Felt) -> bool:
    return a.value != a.ctx.zero and element_order(a) == a.ctx.order - 1
