"""
Catalogue of exponential generating function closed forms.

Each identity pairs a coefficient sequence (computed either from the grammar
or by exhaustive enumeration) with the cross-multiplied form of its closed
expression, so it can be checked coefficient by coefficient.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import UnknownIdentity
from .grammar import DUMONT, DUMONT_B, EULERIAN
from .labeling import Variant, weight_sum
from .perms import (
    asc_suc_polynomial, distribution, eulerian_oracle, exc_drop_fix_polynomial,
    jump_lsuc_polynomial,
)
from .poly import LaurentPolynomial, var
from .series import Factor, TruncatedEgf, crossmul_mismatches, exp_series, gen_from_grammar

logger = logging.getLogger(__name__)

SOURCES = ('grammar', 'enumeration')

CoefficientSource = Callable[[int], TruncatedEgf]
SideBuilder = Callable[[TruncatedEgf], Tuple[List[Factor], List[Factor]]]

_a, _b, _x, _y, _z = (var(name) for name in 'abxyz')
_ONE = LaurentPolynomial.one()


def two_exponential_denominator(order: int) -> TruncatedEgf:
    """y e^{xt} - x e^{yt}"""
    return exp_series(_x, order) * _y - exp_series(_y, order) * _x


def unit_denominator(order: int) -> TruncatedEgf:
    """e^{xt} - x e^t"""
    return exp_series(_x, order) - exp_series(_ONE, order) * _x


def eulerian_denominator(order: int) -> TruncatedEgf:
    """1 - y x^-1 e^{(x-y)t}"""
    return TruncatedEgf.constant(1, order) - exp_series(_x - _y, order) * (_y * _x ** -1)


@dataclass(frozen=True)
class Identity:
    id: str
    formula: str
    coefficients_label: str
    grammar_source: CoefficientSource
    sides: SideBuilder
    enumeration_source: Optional[CoefficientSource] = None
    # coefficient n of the enumeration source sums over S_{n + size_offset}
    size_offset: int = 0

    def coefficients(self, order: int, source: str = 'grammar') -> TruncatedEgf:
        if order < 0:
            raise ValueError(f"Series order must be nonnegative, got {order}")
        if source == 'grammar':
            return self.grammar_source(order)
        if source == 'enumeration':
            if self.enumeration_source is None:
                raise UnknownIdentity(f"Identity {self.id!r} has no enumeration source")
            return self.enumeration_source(order)
        raise ValueError(f"Unknown coefficient source {source!r}; choose from {', '.join(SOURCES)}")

    def mismatches(self, order: int, source: str = 'grammar') -> List[int]:
        series = self.coefficients(order, source)
        lhs, rhs = self.sides(series)
        bad = crossmul_mismatches(lhs, rhs)
        if bad:
            logger.warning("%s (%s source) differs from its closed form at n = %s", self.id, source, bad)
        return bad

    def check(self, order: int, source: str = 'grammar') -> bool:
        return not self.mismatches(order, source)


def _grammar_series(grammar, word, bindings=None) -> CoefficientSource:
    def build(order: int) -> TruncatedEgf:
        series = gen_from_grammar(grammar, word, order)
        return series.substitute(bindings) if bindings else series
    return build


def _enumerated(term: Callable[[int], LaurentPolynomial]) -> CoefficientSource:
    def build(order: int) -> TruncatedEgf:
        return TruncatedEgf(tuple(term(n) for n in range(order + 1)))
    return build


def _exc_fix(n: int) -> LaurentPolynomial:
    return distribution(n, [('exc', 'x'), ('fix', 'z')])


def _derangement(n: int) -> LaurentPolynomial:
    return exc_drop_fix_polynomial(n).substitute({'z': 0})


def _against(denominator, numerator) -> SideBuilder:
    """series * denominator(order) = numerator(order)"""
    def sides(series: TruncatedEgf):
        order = series.order
        return [series, denominator(order)], numerator(order)
    return sides


CATALOGUE: Dict[str, Identity] = {}


def _register(identity: Identity) -> None:
    CATALOGUE[identity.id] = identity


_register(Identity(
    id='exc-fix',
    formula='sum F_n(x,1,z) t^n/n! = (1-x) e^{zt} / (e^{xt} - x e^t)',
    coefficients_label='F_n(x, z)',
    grammar_source=_grammar_series(DUMONT, _a, {'a': 1, 'y': 1}),
    enumeration_source=_enumerated(_exc_fix),
    sides=_against(unit_denominator, lambda order: [1 - _x, exp_series(_z, order)]),
))

_register(Identity(
    id='exc-drop-fix',
    formula='sum F_n(x,y,z) t^n/n! = (y-x) e^{zt} / (y e^{xt} - x e^{yt})',
    coefficients_label='F_n(x, y, z)',
    grammar_source=_grammar_series(DUMONT, _a, {'a': 1}),
    enumeration_source=_enumerated(exc_drop_fix_polynomial),
    sides=_against(two_exponential_denominator, lambda order: [_y - _x, exp_series(_z, order)]),
))

_register(Identity(
    id='dumont-a',
    formula='gen(a, t) = a (y-x) e^{zt} / (y e^{xt} - x e^{yt})',
    coefficients_label='D^n(a)',
    grammar_source=_grammar_series(DUMONT, _a),
    enumeration_source=_enumerated(lambda n: _a * exc_drop_fix_polynomial(n)),
    sides=_against(two_exponential_denominator,
                   lambda order: [_a * (_y - _x), exp_series(_z, order)]),
))

_register(Identity(
    id='jump-lsuc',
    formula='sum P*_n(x,z) t^n/n! = (1-x) e^{zt} / (e^{xt} - x e^t)',
    coefficients_label='P*_n(x, z)',
    grammar_source=_grammar_series(DUMONT, _a, {'a': 1, 'y': 1}),
    enumeration_source=_enumerated(jump_lsuc_polynomial),
    sides=_against(unit_denominator, lambda order: [1 - _x, exp_series(_z, order)]),
))


def _asc_suc_sides(series: TruncatedEgf):
    order = series.order
    lhs = [series, unit_denominator(order), unit_denominator(order)]
    rhs = [_x * (1 - _x) ** 2, exp_series(_x * _z + 1, order)]
    return lhs, rhs


_register(Identity(
    id='asc-suc',
    formula='sum P_{n+1}(x,z) t^n/n! = x (1-x)^2 e^{(xz+1)t} / (e^{xt} - x e^t)^2',
    coefficients_label='P_{n+1}(x, z)',
    grammar_source=_grammar_series(DUMONT_B, _a * _b, {'a': 1, 'y': 1, 'b': _x, 'z': _x * _z}),
    enumeration_source=_enumerated(lambda n: asc_suc_polynomial(n + 1)),
    size_offset=1,
    sides=_asc_suc_sides,
))


def _roselle_ab_sides(series: TruncatedEgf):
    order = series.order
    inner = eulerian_denominator(order)
    lhs = [series, two_exponential_denominator(order), inner]
    rhs = [
        _a * (_y - _x),
        exp_series(_z, order),
        TruncatedEgf.constant(_x - _y, order) + inner * (_b - _x),
    ]
    return lhs, rhs


_register(Identity(
    id='roselle-ab',
    formula='gen(ab, t) = a (y-x) e^{zt} / (y e^{xt} - x e^{yt}) '
            '* ((x-y) / (1 - y x^-1 e^{(x-y)t}) + b - x)',
    coefficients_label='D^n(ab)',
    grammar_source=_grammar_series(DUMONT_B, _a * _b),
    enumeration_source=_enumerated(lambda n: weight_sum(n + 1, Variant.R)),
    size_offset=1,
    sides=_roselle_ab_sides,
))

_register(Identity(
    id='eulerian',
    formula='gen(x, t) = (x-y) / (1 - y x^-1 e^{(x-y)t})',
    coefficients_label='A_n(x, y)',
    grammar_source=_grammar_series(EULERIAN, _x),
    enumeration_source=_enumerated(eulerian_oracle),
    sides=_against(eulerian_denominator,
                   lambda order: [TruncatedEgf.constant(_x - _y, order)]),
))

_register(Identity(
    id='constant-ax',
    formula='gen(a x^-1, t) = a x^-1 e^{(z-y)t}',
    coefficients_label='D^n(a x^-1)',
    grammar_source=_grammar_series(DUMONT, _a * _x ** -1),
    sides=lambda series: ([series], [_a * _x ** -1, exp_series(_z - _y, series.order)]),
))

_register(Identity(
    id='derangement',
    formula='sum F_n(x,y,0) t^n/n! = (y-x) / (y e^{xt} - x e^{yt})',
    coefficients_label='F_n(x, y, 0)',
    grammar_source=_grammar_series(DUMONT, _a, {'a': 1, 'z': 0}),
    enumeration_source=_enumerated(_derangement),
    sides=_against(two_exponential_denominator,
                   lambda order: [TruncatedEgf.constant(_y - _x, order)]),
))


def get_identity(name: str) -> Identity:
    try:
        return CATALOGUE[name]
    except KeyError:
        raise UnknownIdentity(
            f"Unknown identity {name!r}; choose from {', '.join(sorted(CATALOGUE))}"
        ) from None


def identity_ids() -> Sequence[str]:
    return sorted(CATALOGUE)
