import itertools

import pytest
from conftest import F2, F3, F4, F8, P, gen, sympy_irreducible

from irredcomp import (
    Felt,
    Poly,
    brute_force_irreducible,
    conjugate_factor,
    dickson_split,
    enumerate_irreducibles,
    extend,
    is_irreducible,
    is_primitive,
    make_field,
    minimal_polynomial,
    mobius_product,
    norm_product,
    poly_order,
    sidelnikov_q1_check,
    sidelnikov_q9_check,
)
from irredcomp.classify import find_root, monic_polys
from irredcomp.errors import OracleRangeError, PreconditionError
from irredcomp.fields import divisors, element_order, factor_group_order, is_primitive_element
from irredcomp.polynomials import frobenius_twist, lift, powmod
from irredcomp.textio import parse_element, parse_poly


@pytest.mark.parametrize(
    "text,expected",
    [("x^2 + x + 1", True), ("x^2 + 1", False), ("x^6 + x^5 + x^3 + x^2 + 1", True)],
)
def test_is_irreducible_examples(text, expected):
    assert is_irreducible(P(text)) is expected


def test_is_irreducible_constant():
    with pytest.raises(PreconditionError):
        is_irreducible(P("1"))


def test_monicization():
    assert is_irreducible(P("2x^2 + 2", F3))
    assert poly_order(P("2x^2 + 2", F3)) == 4


@pytest.mark.parametrize(
    "text,expected",
    [("x^3 + x + 1", True), ("x^4 + x^2 + 1", False), ("x^6 + x^4 + x^2 + x + 1", True)],
)
def test_brute_force_examples(text, expected):
    assert brute_force_irreducible(P(text)) is expected


def test_brute_force_range():
    with pytest.raises(OracleRangeError):
        brute_force_irreducible(Poly.monomial(F2, 50) + 1)


def test_mobius_examples():
    assert mobius_product(F2, 2) == P("x^2 + x + 1")
    assert mobius_product(F2, 1) == P("x^2 + x")
    assert mobius_product(F2, 3) == P("x^6 + x^5 + x^4 + x^3 + x^2 + x + 1")


def test_order_examples():
    assert poly_order(P("x^2 + x + 1")) == 3
    assert poly_order(P("x^4 + x^3 + x^2 + x + 1")) == 5
    assert poly_order(P("x^6 + x^4 + x^2 + x + 1")) == 21


def test_order_errors():
    with pytest.raises(PreconditionError):
        poly_order(P("x^2 + x"))
    with pytest.raises(PreconditionError):
        poly_order(P("x^4 + x^2 + 1"))
    with pytest.raises(PreconditionError):
        poly_order(P("x^2 + x + 1"), factor_group_order(15))


def test_primitive_examples():
    assert is_primitive(P("x^2 + x + 1"))
    assert not is_primitive(P("x^4 + x^3 + x^2 + x + 1"))
    assert is_primitive(P("x^5 + x^4 + x^2 + x + 1"))
    # reducible input and f(0) = 0 give False rather than an error
    assert not is_primitive(P("x^4 + x^2 + 1"))
    assert not is_primitive(P("x"))


def test_rabin_vs_sympy_f2_degree_10():
    for f in monic_polys(F2, 10):
        assert is_irreducible(f) == sympy_irreducible(f)


def test_rabin_vs_sympy_f5_degree_4():
    for f in monic_polys(make_field(5), 4):
        assert is_irreducible(f) == sympy_irreducible(f)


def test_rabin_vs_brute_force_over_f4():
    for n in range(1, 5):
        for f in monic_polys(F4, n):
            assert is_irreducible(f) == brute_force_irreducible(f)


@pytest.mark.parametrize("K,n", [(F2, n) for n in range(1, 6)] + [(F3, n) for n in range(1, 4)] + [(F4, 2)])
def test_mobius_degree_formula(K, n):
    from irredcomp.fields import mobius

    I = mobius_product(K, n)
    assert I.degree == sum(mobius(d) * K.order ** (n // d) for d in divisors(n))
    prod = Poly.constant(K, 1)
    for g in enumerate_irreducibles(K, n):
        prod = prod * g
    assert prod == I


def test_order_properties_exhaustive():
    one = Poly.constant(F2, 1)
    for n in range(1, 8):
        for f in enumerate_irreducibles(F2, n):
            if f[0] == 0:
                continue
            e = poly_order(f)
            assert (2**n - 1) % e == 0
            x = Poly.x(F2)
            assert powmod(x, e, f) == one
            for ell in factor_group_order(e).primes if e > 1 else []:
                assert powmod(x, e // ell, f) != one


def test_enumerate_primitive_cubics():
    assert [str(f) for f in enumerate_irreducibles(F2, 3, primitive=True)] == ["x^3 + x + 1", "x^3 + x^2 + 1"]


def test_enumerate_quartic_count():
    assert len(enumerate_irreducibles(F2, 4)) == 3


def test_conjugate_factor_examples():
    f = P("x^4 + x + 1")
    g = conjugate_factor(f, 2)
    assert g.ctx.degree == 2 and g.degree == 2 and g.is_monic()
    assert g * frobenius_twist(g, 1) == lift(f, g.ctx)
    assert conjugate_factor(f, 1) == f
    h = conjugate_factor(P("x^6 + x^5 + x^3 + x^2 + 1"), 3)
    twists = {frobenius_twist(h, v) for v in range(3)}
    assert parse_poly("x^2 + x + (y^2 + y + 1)", F8) in twists


def test_conjugate_factor_is_least_twist():
    f = P("x^6 + x^5 + x^3 + x^2 + 1")
    h = conjugate_factor(f, 3)
    assert h == min((frobenius_twist(h, v) for v in range(3)), key=Poly.sort_key)


def test_conjugate_factor_errors():
    with pytest.raises(PreconditionError):
        conjugate_factor(P("x^4 + x + 1"), 3)
    with pytest.raises(PreconditionError):
        conjugate_factor(P("x^4 + x^2 + 1"), 2)


def test_conjugate_factor_round_trip_f3():
    for n in range(1, 5):
        for f in enumerate_irreducibles(F3, n):
            for d in divisors(n):
                assert norm_product(conjugate_factor(f, d), d) == f


def test_root_choice_does_not_change_norm():
    # every conjugate root gives the same norm product
    f = P("x^6 + x^5 + x^3 + x^2 + 1")
    L = extend(F2, 3)
    M = extend(L, 2)
    rho = find_root(f, M)
    norms = set()
    for j in range(6):
        r = rho ** (2**j)
        norms.add(norm_product(minimal_polynomial(r, L), 3))
    assert norms == {f}


def test_find_root_none():
    assert find_root(P("x^2 + x + 1"), F2) is None


def test_dickson_examples():
    lin, cof = dickson_split(F3, 1, 2, 0)
    assert lin == P("x", F3) and cof == P("x^2 + 1", F3)
    y = gen(F4)
    with pytest.raises(PreconditionError):
        dickson_split(F4, 1, y, 0)
    lin, cof = dickson_split(F4, 2, y, 1)
    assert lin.degree == 1 and cof.degree == 3 and is_irreducible(cof)


def test_dickson_rejects_non_primitive_theta():
    with pytest.raises(PreconditionError):
        dickson_split(F3, 1, 1, 0)


def test_dickson_exhaustive_q9_q25():
    # larger than the acceptance sweep: all m | s for q = 9 and q = 25
    for K in (make_field(3, [2]), make_field(5, [2])):
        for m in divisors(K.absolute_degree):
            for th in K.elements():
                theta = Felt(K, th)
                if not theta or not is_primitive_element(theta):
                    continue
                if K.p**m > 25:
                    continue
                for b in list(K.elements())[:5]:
                    lin, cof = dickson_split(K, m, theta, Felt(K, b))
                    assert cof.degree == K.p**m - 1


def test_sidelnikov_q1_examples():
    E = extend(F2, 2)
    x0 = gen(E)
    verdict, f = sidelnikov_q1_check(F2, 0, x0)
    assert verdict and f == P("x^3 + x + 1")
    verdict, f = sidelnikov_q1_check(F2, 1, x0)
    ratio = (1 - x0**2) / (1 - x0)
    assert verdict == (element_order(ratio, factor_group_order(3)) == 3)
    with pytest.raises(PreconditionError):
        sidelnikov_q1_check(F2, 0, Felt(E, E.one))


def test_sidelnikov_q1_rejects_wrong_norm():
    E = extend(F3, 2)
    # an element of F_9 outside F_3 with x0^4 != 1
    for v in E.elements():
        a = Felt(E, v)
        if a and not E.in_base(v) and a**4 != 1:
            with pytest.raises(PreconditionError):
                sidelnikov_q1_check(F3, 0, a)
            break


def test_sidelnikov_q9_examples():
    y = gen(F4)
    verdict, f = sidelnikov_q9_check(F4, y + 1, 1, y)
    assert f.degree == 3
    assert verdict == is_irreducible(f)
    with pytest.raises(PreconditionError):
        sidelnikov_q9_check(F4, y, 1, 1)
    verdict, f = sidelnikov_q9_check(F3, 0, 1, 2)
    assert verdict and f.degree == 2 and is_irreducible(f)


def test_sidelnikov_q9_criterion_sign_in_odd_characteristic():
    # the ratio with '+' signs disagrees with irreducibility for some tuples,
    # the ratio (w - x0)/(w - x1) never does
    K = make_field(5)
    el = [Felt(K, v) for v in K.elements()]
    plus_disagrees = 0
    for w, a, b in itertools.product(el, repeat=3):
        if a == b or w == b or not (w + b):
            continue
        verdict, f = sidelnikov_q9_check(K, w, a, b)
        assert verdict == is_irreducible(f)
        r = (w + a) / (w + b)
        plus = bool(r) and element_order(r) == K.order - 1
        plus_disagrees += plus != is_irreducible(f)
    assert plus_disagrees > 0


@pytest.mark.parametrize("K", [make_field(7), make_field(3, [2])], ids=lambda K: K.descriptor())
def test_sidelnikov_q9_larger_fields(K):
    el = [Felt(K, v) for v in K.elements()]
    for w, a, b in itertools.product(el, repeat=3):
        if a != b and w != b:
            sidelnikov_q9_check(K, w, a, b)


def test_sidelnikov_q1_q5():
    K = make_field(5)
    E = extend(K, 2)
    n = 0
    for v in E.elements():
        x0 = Felt(E, v)
        if E.in_base(v) or x0**6 != 1:
            continue
        for w in K.elements():
            sidelnikov_q1_check(K, w, x0)
            n += 1
    assert n == 4 * 5


def test_element_parsing_in_tower():
    T = make_field(2, [2, 2])
    z = parse_element("(y)z + 1", T)
    assert z.ctx == T and z**(T.order - 1) == 1
