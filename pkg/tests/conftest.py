import pathlib

import pytest

from irredcomp import Felt, Poly, make_field, parse_field, parse_poly

GOLDEN = pathlib.Path(__file__).parent / "golden"

F2 = make_field(2)
F3 = make_field(3)
F4 = make_field(2, [2])
F5 = make_field(5)
F8 = make_field(2, [3])
F16 = make_field(2, [4])


def P(text, K=F2):
    return parse_poly(text, K)


def E(K, idx):
    """Element of K by enumeration index."""
    return Felt(K, K.element(idx))


def gen(K):
    """The generator of the top level of K (the element printed as its variable)."""
    return E(K, K.base_order)


def sympy_irreducible(f: Poly) -> bool:
    """Independent check via sympy, prime fields only."""
    from sympy import ZZ
    from sympy.polys.galoistools import gf_irreducible_p

    assert not f.ctx.chain
    return bool(gf_irreducible_p([int(c) for c in reversed(f.coeffs)], f.ctx.p, ZZ))


def golden(name: str) -> str:
    return (GOLDEN / name).read_text().strip()


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


__all__ = ["P", "E", "F2", "F3", "F4", "F5", "F8", "F16", "gen", "parse_field", "make_field"]
