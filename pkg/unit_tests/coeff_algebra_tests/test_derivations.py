from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coeff_algebra import (
    AlgebraMismatch,
    CoefficientAlgebra,
    Derivation,
    ElementSyntaxError,
    format_poly,
    parse_poly,
)

XY = CoefficientAlgebra(("x", "y"))

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
monomials = st.tuples(st.integers(0, 2), st.integers(0, 2))


@st.composite
def polys(draw, max_terms=3):
    p = XY.zero
    for mono, c in draw(st.lists(st.tuples(monomials, rationals), max_size=max_terms)):
        p = p + XY.monomial(mono, c)
    return p


@st.composite
def derivations(draw):
    return Derivation(XY, (draw(polys()), draw(polys())))


@settings(max_examples=60, deadline=None)
@given(derivations(), polys(), polys())
def test_derivation_product_rule(D, f, g):
    assert D.apply(f * g) == D.apply(f) * g + f * D.apply(g)


@settings(max_examples=40, deadline=None)
@given(derivations(), derivations(), derivations())
def test_commutator_jacobi(D1, D2, D3):
    total = (
        D1.commutator(D2.commutator(D3))
        + D2.commutator(D3.commutator(D1))
        + D3.commutator(D1.commutator(D2))
    )
    assert not total


@settings(max_examples=40, deadline=None)
@given(derivations(), derivations(), polys())
def test_commutator_is_a_derivation_acting_as_composition(D1, D2, f):
    assert D1.commutator(D2).apply(f) == D1.apply(D2.apply(f)) - D2.apply(D1.apply(f))


@settings(max_examples=40, deadline=None)
@given(derivations(), polys(), polys())
def test_times_is_module_action(D, f, g):
    assert D.times(f).times(g) == D.times(f * g)


def test_parse_and_format_bit_exact_example():
    p = parse_poly(XY, "3/2*x^2*y - x + 1")
    assert p == XY.monomial((2, 1), Fraction(3, 2)) - XY.monomial((1, 0)) + XY.one
    assert format_poly(XY, p) == "3/2*x^2*y - x + 1"


def test_parse_ignores_whitespace():
    assert parse_poly(XY, " x * y ^ 2 -  1/3 ") == XY.monomial((1, 2)) - XY.constant(Fraction(1, 3))


def test_parse_error_carries_position():
    with pytest.raises(ElementSyntaxError) as info:
        parse_poly(XY, "x + * y")
    assert info.value.line == 1
    assert info.value.column >= 1


def test_unknown_variable_is_a_syntax_error():
    with pytest.raises(ElementSyntaxError):
        parse_poly(XY, "z")


def test_x_d_dx_on_x_squared():
    D = Derivation(XY, (XY.monomial((1, 0)), XY.zero))
    assert D.apply(XY.monomial((2, 0))) == XY.monomial((2, 0), 2)


def test_derivation_shape_is_checked():
    with pytest.raises(AlgebraMismatch):
        Derivation(XY, (XY.one,))


def test_mixing_rings_is_rejected():
    X = CoefficientAlgebra(("x",))
    with pytest.raises(AlgebraMismatch):
        XY.require(X.gens[0])


def test_monomial_order_within_a_degree():
    assert XY.monomials(2, min_degree=2) == ((2, 0), (1, 1), (0, 2))
