"""Tests for polynomial arithmetic and the Meixner-Pollaczek evaluators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylmp.scalars import GaussianRational, factorial, i_power
from weylmp.polynomials import (
    ChainValues,
    ParameterError,
    Polynomial,
    X,
    hyp2f1_terminating,
    mp_definition_eval,
    mp_real_form,
    mp_via_definition_real,
    pochhammer_poly,
    poly_arith,
    poly_divmod,
    poly_gcd,
    poly_shift,
    transformation_chain,
)

ALPHAS = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2))

rational_coeffs = st.fractions(min_value=-8, max_value=8, max_denominator=5)
polys = st.builds(Polynomial, st.lists(rational_coeffs, max_size=6))


def test_poly_basics():
    f = Polynomial((1, 2, 1))
    assert f.degree == 2
    assert f(Fraction(3)) == 16
    assert Polynomial((0, 0)).is_zero
    assert poly_arith(f, Polynomial((1,)), "mul") == f
    assert poly_arith(f, f, "sub").is_zero
    with pytest.raises(ValueError):
        poly_arith(f, f, "div")


def test_poly_shift():
    assert poly_shift(X, 2) == Polynomial((2, 1))
    assert poly_shift(X * X, 1) == Polynomial((1, 2, 1))
    assert poly_shift(Polynomial((5,)), 7) == Polynomial((5,))


@settings(max_examples=40)
@given(polys, st.integers(-5, 5), st.integers(-5, 5))
def test_shift_is_evaluation_compatible(f, s, t):
    assert f.shift(s)(Fraction(t)) == f(Fraction(t + s))


def test_pochhammer_poly_small():
    half = Fraction(1, 2)
    base = Polynomial((half, half))  # (1 + x) / 2
    assert pochhammer_poly(base, 0) == Polynomial((1,))
    assert pochhammer_poly(base, 1) == base
    assert pochhammer_poly(base, 2) == Polynomial((Fraction(3, 4), 1, Fraction(1, 4)))


@settings(max_examples=30)
@given(polys, st.integers(0, 5), st.integers(0, 5))
def test_pochhammer_poly_additivity(base, a, b):
    product = pochhammer_poly(base, a) * pochhammer_poly(base + a, b)
    assert pochhammer_poly(base, a + b) == product


def test_poly_division_and_gcd():
    f = Polynomial((1, 2, 1))  # (x+1)^2
    g = Polynomial((1, 1))
    quotient, remainder = poly_divmod(f, g)
    assert quotient == g and remainder.is_zero
    assert poly_gcd(f, g) == g
    with pytest.raises(ZeroDivisionError):
        poly_divmod(f, Polynomial())


def test_mp_real_form_small():
    assert mp_real_form(0, Fraction(1, 2)) == Polynomial((1,))
    assert mp_real_form(1, Fraction(1, 2)) == X
    assert mp_real_form(2, Fraction(1, 2)) == Polynomial((1, 0, 1))
    assert mp_real_form(1, Fraction(1)) == X


def test_mp_real_form_degree_and_parity():
    for n in range(11):
        for alpha in ALPHAS:
            poly = mp_real_form(n, alpha)
            assert poly.degree == n
            mirrored = Polynomial(
                ((-1) ** i * c for i, c in enumerate(poly.coefficients()))
            )
            assert mirrored == ((-1) ** n) * poly


def test_hyp2f1_terminating():
    assert hyp2f1_terminating(0, 5, 7, 3) == GaussianRational(1)
    assert hyp2f1_terminating(4, 5, 7, 0) == GaussianRational(1)
    assert hyp2f1_terminating(1, 1, 2, 2) == GaussianRational(0)
    with pytest.raises(ParameterError):
        hyp2f1_terminating(2, 1, -1, 1)
    with pytest.raises(ParameterError):
        hyp2f1_terminating(1, 1, 0, 1)
    # c = -n is fine: (c)_k stays nonzero up to the truncation order
    assert hyp2f1_terminating(1, 1, -1, 1) == GaussianRational(2)


def test_mp_definition_eval_small():
    assert mp_definition_eval(0, Fraction(1, 2), GaussianRational(0)) == GaussianRational(1)
    # consistency case from the real form: Q_1^(1/2)(3) = 3
    value = factorial(1) * i_power(-1) * mp_definition_eval(
        1, Fraction(1, 2), GaussianRational(0, Fraction(3, 2))
    )
    assert value == GaussianRational(3)
    assert mp_via_definition_real(2, Fraction(1, 2), 1) == 2


def test_definition_matches_real_form_on_grid():
    for n in range(11):
        for alpha in ALPHAS:
            poly = mp_real_form(n, alpha)
            for t in range(-3, 4):
                assert mp_via_definition_real(n, alpha, t) == poly(t), (n, alpha, t)


def test_definition_eval_is_purely_real_combination():
    for n in range(11):
        for alpha in ALPHAS:
            for t in range(-3, 4):
                combined = factorial(n) * i_power(-n) * mp_definition_eval(
                    n, alpha, GaussianRational(0, Fraction(t, 2))
                )
                assert combined.im == 0


def test_transformation_chain_examples():
    chain = transformation_chain(0, Fraction(5, 2), 2)
    assert chain == ChainValues(1, 1, 1, False)
    chain = transformation_chain(1, Fraction(1, 2), 3)
    assert chain.first == chain.middle == chain.closed == 3
    chain = transformation_chain(2, Fraction(3, 2), 2)
    assert chain.first == chain.middle == chain.closed


def test_transformation_chain_on_grid():
    limit_cells = 0
    for n in range(11):
        for alpha in ALPHAS:
            for t in range(-3, 4):
                chain = transformation_chain(n, alpha, t)
                assert chain.first == chain.middle == chain.closed, (n, alpha, t)
                limit_cells += chain.middle_is_limit
    # the grid intentionally contains removable singularities of the middle stage
    assert limit_cells > 0


def test_transformation_chain_limit_cell():
    """alpha + t/2 = 0 makes the middle stage's lower parameter degenerate."""
    chain = transformation_chain(2, Fraction(1, 2), -1)
    assert chain.middle_is_limit
    assert chain.first == chain.middle == chain.closed == mp_real_form(2, Fraction(1, 2))(-1)


def test_polynomial_str():
    assert str(Polynomial()) == "0"
    assert str(Polynomial((1, 0, 1))) == "x^2 + 1"
    assert str(Polynomial((Fraction(-1, 2), 1))) == "x - 1/2"
