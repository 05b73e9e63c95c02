"""Test grammar derivations and their combinatorial meaning."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.errors import UnknownGrammar
from src.core.grammar import (
    DUMONT,
    DUMONT_B,
    EULERIAN,
    Grammar,
    derive,
    derive_n,
    eulerian,
    get_grammar,
)
from src.core.perms import eulerian_oracle, exc_drop_fix_polynomial
from src.core.poly import LaurentPolynomial, var
from tests.strategies import polynomials

a, b, x, y, z = (var(name) for name in 'abxyz')


def test_dumont_small_orders():
    assert DUMONT.derive_n(a, 0) == a
    assert DUMONT.derive(a) == a * z
    assert str(DUMONT.derive_n(a, 2)) == 'az^2 + axy'
    assert str(DUMONT.derive_n(a, 3)) == 'az^3 + 3axyz + axy^2 + ax^2y'


@pytest.mark.parametrize('n', range(6))
def test_dumont_counts_excedances_drops_fixed_points(n):
    assert DUMONT.derive_n(a, n) == a * exc_drop_fix_polynomial(n)


def test_eulerian_polynomials():
    assert eulerian(0) == x
    assert str(eulerian(3)) == 'xy^3 + 4x^2y^2 + x^3y'
    for k in range(6):
        assert eulerian(k) == eulerian_oracle(k)


def test_constants_of_the_dumont_grammar():
    assert DUMONT.is_constant(z - y)
    assert DUMONT.is_constant(x - y)
    assert not DUMONT.is_constant(a)
    for n in range(5):
        assert DUMONT.derive_n(a * x ** -1, n) == a * x ** -1 * (z - y) ** n


def test_variables_without_rules_are_constants():
    assert EULERIAN.derive(a * z) == LaurentPolynomial.zero()
    assert DUMONT.rule('b') == LaurentPolynomial.zero()


def test_dumont_b_marks_initial_succession():
    assert DUMONT_B.derive(a * b) == a * z * b + a * x * y


@given(polynomials, polynomials)
def test_derivative_obeys_leibniz_rule(p, q):
    for grammar in (DUMONT, DUMONT_B):
        assert derive(grammar, p * q) == grammar.derive(p) * q + p * grammar.derive(q)
        assert grammar.derive(p + q) == grammar.derive(p) + grammar.derive(q)


@given(polynomials, st.integers(min_value=0, max_value=5))
def test_constants_factor_out_of_iterated_derivatives(p, n):
    for grammar in (DUMONT, DUMONT_B):
        for c in (z - y, x - y):
            assert derive_n(grammar, c * p, n) == c * derive_n(grammar, p, n)


def test_grammar_from_text_and_file(tmp_path):
    rules = tmp_path / 'eulerian.rules'
    rules.write_text("x -> x*y\ny -> x*y\n")
    grammar = Grammar.from_file(rules)
    assert grammar.name == 'eulerian'
    assert grammar.derive_n(x, 4) == eulerian(4)
    assert grammar.to_text() == 'x -> xy\ny -> xy'


def test_missing_grammar_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        Grammar.from_file(tmp_path / 'missing.rules')


def test_get_grammar():
    assert get_grammar('dumont-b') is DUMONT_B
    with pytest.raises(UnknownGrammar):
        get_grammar('fibonacci')


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        DUMONT.derive_n(a, -1)
