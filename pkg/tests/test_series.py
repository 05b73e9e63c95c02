"""Test truncated exponential generating function arithmetic."""

import pytest

from src.core.errors import OrderMismatch
from src.core.grammar import DUMONT, DUMONT_B
from src.core.poly import LaurentPolynomial, var
from src.core.series import (
    TruncatedEgf, check_identity_crossmul, crossmul_mismatches, exp_series, gen_from_grammar,
    mul_series,
)

a, b, x, y, z = (var(name) for name in 'abxyz')


def test_exp_series_coefficients_are_powers():
    assert list(exp_series(x + 1, 3)) == [LaurentPolynomial.one(), x + 1, (x + 1) ** 2, (x + 1) ** 3]


def test_product_is_binomial_convolution():
    # e^{xt} e^{yt} = e^{(x+y)t}
    assert mul_series(exp_series(x, 5), exp_series(y, 5)) == exp_series(x + y, 5)


def test_gen_from_grammar_is_iterated_derivative():
    series = gen_from_grammar(DUMONT, a, 4)
    assert series.order == 4
    assert series[2] == a * z ** 2 + a * x * y
    assert series.to_json()[1] == 'az'


def test_gen_is_multiplicative():
    for grammar in (DUMONT, DUMONT_B):
        product = gen_from_grammar(grammar, a, 6) * gen_from_grammar(grammar, b * x, 6)
        assert gen_from_grammar(grammar, a * b * x, 6) == product


def test_constant_series_and_scaling():
    series = TruncatedEgf.constant(x, 2)
    assert list(series) == [x, LaurentPolynomial.zero(), LaurentPolynomial.zero()]
    assert list((series * 2).coeffs) == [2 * x, 0, 0]
    assert (exp_series(z, 3) - exp_series(z, 3)) == TruncatedEgf.constant(0, 3)


def test_orders_must_agree():
    with pytest.raises(OrderMismatch):
        exp_series(x, 3) + exp_series(x, 4)
    with pytest.raises(OrderMismatch):
        mul_series(exp_series(x, 3), exp_series(x, 2))
    with pytest.raises(OrderMismatch):
        exp_series(x, 3).truncate(5)
    assert exp_series(x, 5).truncate(3) == exp_series(x, 3)


def test_crossmul_reports_first_wrong_coefficient():
    # gen(a x^-1) = a x^-1 e^{(z-y)t}, so e^{(z+y)t} is wrong from t^1 on
    series = gen_from_grammar(DUMONT, a * x ** -1, 4)
    good = [a * x ** -1, exp_series(z - y, 4)]
    bad = [a * x ** -1, exp_series(z + y, 4)]
    assert check_identity_crossmul([series], good)
    assert crossmul_mismatches([series], bad) == [1, 2, 3, 4]


def test_substitute_acts_coefficientwise():
    series = gen_from_grammar(DUMONT, a, 3).substitute({'a': 1, 'y': 1})
    assert series[2] == z ** 2 + x


def test_text_rendering():
    assert exp_series(x, 2).to_text() == '0: 1\n1: x\n2: x^2'


def test_empty_series_rejected():
    with pytest.raises(ValueError):
        TruncatedEgf(())
