"""Tests for the expression grammar, lowering and round-tripping."""

import random
from fractions import Fraction

import pytest

from weylmp.identities import random_element
from weylmp.parsing import (
    Commutator,
    Difference,
    ParseError,
    Product,
    lower,
    parse,
    parse_element,
)
from weylmp.weyl import ONE, P, Q, T_ELEMENT, render


def test_parse_structure():
    tree = parse("p*q - q*p")
    assert isinstance(tree, Difference)
    assert isinstance(tree.left, Product)
    assert isinstance(parse("[p,q]"), Commutator)


def test_lowering_examples():
    assert parse_element("p*q - q*p") == ONE
    assert parse_element("[p,q]") == ONE
    assert parse_element("T") == T_ELEMENT
    assert render(parse_element("(p+q)^2")) == "q^2 + 2*q*p + p^2 + 1"
    assert parse_element("0*p^5").is_zero
    assert parse_element("3/2") == Fraction(3, 2) * ONE
    assert parse_element("-q^2") == -(Q**2)
    assert parse_element("2^10") == 1024 * ONE
    assert parse_element("[T, p*q]").is_zero
    assert parse_element("p^0") == ONE


def test_t_lowering():
    assert parse_element("T") == parse_element("p*q + q*p")
    assert render(parse_element("T")) == "2*q*p + 1"


def test_negative_exponent_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse("p^(-1)")
    assert "negative exponent" in str(excinfo.value)


def test_fractional_exponent_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse("p^(1/2)")
    assert "integer" in str(excinfo.value)


def test_juxtaposition_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse("pq")
    assert "explicit" in str(excinfo.value)
    with pytest.raises(ParseError):
        parse("2p")


def test_error_positions():
    with pytest.raises(ParseError) as excinfo:
        parse("p + \n q *")
    assert excinfo.value.line == 2
    with pytest.raises(ParseError) as excinfo:
        parse("p @ q")
    assert excinfo.value.column == 3


@pytest.mark.parametrize(
    "bad",
    ["", "p +", "(p", "[p q]", "[p,]", "p^", "p^x", "1/0", "p//q", "p..q", "x"],
)
def test_malformed_inputs(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_unary_minus_binds_to_factor():
    assert parse_element("-p^2") == -(P**2)
    assert parse_element("-3/2*q") == Fraction(-3, 2) * Q
    assert parse_element("1 - -1") == 2 * ONE


def test_round_trip_on_random_canonical_forms():
    rng = random.Random(20240809)
    for _ in range(200):
        element = random_element(rng, max_terms=5, max_exponent=6)
        rendered = render(element)
        assert parse_element(rendered) == element, rendered


def test_round_trip_edge_cases():
    for source in ("0", "1", "-1", "q^9*p^11", "1/7*q - p"):
        element = parse_element(source)
        assert parse_element(render(element)) == element
