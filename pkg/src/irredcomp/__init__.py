"""Exact finite-field arithmetic and composition constructions of irreducible polynomials."""

from .classify import (
    brute_force_irreducible,
    conjugate_factor,
    dickson_split,
    enumerate_irreducibles,
    is_irreducible,
    is_primitive,
    minimal_polynomial,
    mobius_product,
    poly_order,
    sidelnikov_q1_check,
    sidelnikov_q9_check,
)
from .constructions import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .fields import (
    Felt,
    FieldCtx,
    OrderFactorization,
    element_degree,
    element_order,
    extend,
    factor_group_order,
    frobenius,
    make_field,
    set_degree,
)
from .polynomials import (
    Poly,
    affine_compose,
    coeff_set_degree,
    compose_mod,
    divrem,
    evaluate,
    format_exps,
    format_poly,
    frobenius_twist,
    gcd,
    norm_product,
    powmod,
    reciprocal,
    to_conventional,
    to_linearized,
)
from .textio import parse_element, parse_field, parse_poly

__version__ = "0.1.0"
