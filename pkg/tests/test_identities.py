"""Test the generating function catalogue against both coefficient sources."""

import pytest

from src.core.errors import UnknownIdentity
from src.core.identities import CATALOGUE, SOURCES, get_identity, identity_ids
from src.core.series import crossmul_mismatches

ORDER = 6


@pytest.mark.parametrize('identity_id', sorted(CATALOGUE))
def test_grammar_coefficients_satisfy_closed_form(identity_id):
    assert get_identity(identity_id).mismatches(ORDER, 'grammar') == []


@pytest.mark.parametrize('identity_id', sorted(
    name for name, identity in CATALOGUE.items() if identity.enumeration_source is not None
))
def test_enumerated_coefficients_satisfy_closed_form(identity_id):
    identity = get_identity(identity_id)
    order = 5 - identity.size_offset
    assert identity.check(order, 'enumeration')
    assert identity.coefficients(order, 'enumeration') == identity.coefficients(order, 'grammar')


def test_exc_drop_fix_coefficients():
    series = get_identity('exc-drop-fix').coefficients(4)
    assert series.to_json() == [
        '1',
        'z',
        'z^2 + xy',
        'z^3 + 3xyz + xy^2 + x^2y',
        'z^4 + 6xyz^2 + 4xy^2z + xy^3 + 4x^2yz + 7x^2y^2 + x^3y',
    ]


def test_asc_suc_is_shifted_by_one():
    series = get_identity('asc-suc').coefficients(2)
    assert series.to_json() == ['x', 'x + x^2z', 'x + 2x^2 + 2x^2z + x^3z^2']


def test_jump_lsuc_coefficients():
    series = get_identity('jump-lsuc').coefficients(3, 'enumeration')
    assert series.to_json() == ['1', 'z', 'z^2 + x', 'z^3 + x + 3xz + x^2']


def test_perturbed_series_is_detected():
    identity = get_identity('derangement')
    series = identity.coefficients(4)
    broken = type(series)(series.coeffs[:3] + (series[3] + 1,) + series.coeffs[4:])
    lhs, rhs = identity.sides(broken)
    assert crossmul_mismatches(lhs, rhs)[0] == 3


def test_constant_identity_has_no_enumeration_source():
    with pytest.raises(UnknownIdentity):
        get_identity('constant-ax').coefficients(3, 'enumeration')


def test_unknown_identity_and_source():
    with pytest.raises(UnknownIdentity):
        get_identity('fxz')
    with pytest.raises(ValueError):
        get_identity('eulerian').coefficients(3, 'oracle')
    assert SOURCES == ('grammar', 'enumeration')
    assert 'roselle-ab' in identity_ids()
