"""Test the polynomial, tree and grammar rule parsers."""

from fractions import Fraction

import pytest

from src.core.errors import ParseError
from src.core.poly import var
from src.utils.parsing import (
    parse_cycles_text,
    parse_grammar_rules,
    parse_polynomial,
    parse_tree_text,
)

a, b, x, y, z = (var(name) for name in 'abxyz')


@pytest.mark.parametrize('text,expected', [
    ('a', a),
    ('a*b', a * b),
    ('a*x^-1', a * x ** -1),
    ('z - y', z - y),
    ('3*x*y + x^2', 3 * x * y + x ** 2),
    ('-(x + 1)^2', -(x + 1) ** 2),
    ('x/2', Fraction(1, 2) * x),
])
def test_parse_polynomial(text, expected):
    assert parse_polynomial(text) == expected


@pytest.mark.parametrize('text', ['', 'a**b', 'w', '2xy', 'x/y', '(a'])
def test_parse_polynomial_rejects(text):
    with pytest.raises(ParseError):
        parse_polynomial(text)


def test_parse_tree_text():
    assert parse_tree_text('(1 z (2 z a))') == (1, 'z', (2, 'z', 'a'))
    with pytest.raises(ParseError):
        parse_tree_text('(1 q a)')


def test_parse_cycles_text():
    assert parse_cycles_text('(1 8 4 9 6)(2) (3 5)') == [(1, 8, 4, 9, 6), (2,), (3, 5)]
    assert parse_cycles_text('(5 3)(7)') == [(5, 3), (7,)]


@pytest.mark.parametrize('text', ['()', '1 2', '(1 2', '(1 -2)', ''])
def test_parse_cycles_text_rejects(text):
    with pytest.raises(ParseError):
        parse_cycles_text(text)


def test_parse_grammar_rules():
    rules = parse_grammar_rules("""
    # Eulerian grammar
    x -> x*y
    y -> x*y   # same rule
    """)
    assert rules == {'x': x * y, 'y': x * y}


@pytest.mark.parametrize('text', ['x => y', 'w -> x', 'x -> y\nx -> z', 'x -> y +'])
def test_parse_grammar_rules_rejects(text):
    with pytest.raises(ParseError):
        parse_grammar_rules(text)
