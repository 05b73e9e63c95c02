"""
Truncated exponential generating functions in t.
coeffs[n] is the coefficient of t^n/n!, so products are binomial convolutions.
Rational identities are checked in cross-multiplied form; there is no series
division.
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import Any, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from .errors import OrderMismatch
from .grammar import Grammar
from .poly import LaurentPolynomial, as_polynomial

logger = logging.getLogger(__name__)

MAX_SERIES_ORDER = 10


@dataclass(frozen=True)
class TruncatedEgf:
    coeffs: Tuple[LaurentPolynomial, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("A truncated series needs at least the constant coefficient")
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Any]) -> 'TruncatedEgf':
        polys = []
        for c in coeffs:
            poly = as_polynomial(c)
            if poly is None:
                raise TypeError(f"Not a polynomial coefficient: {c!r}")
            polys.append(poly)
        return cls(tuple(polys))

    @classmethod
    def constant(cls, c: Any, order: int) -> 'TruncatedEgf':
        zero = LaurentPolynomial.zero()
        return cls.from_coefficients([c] + [zero] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> LaurentPolynomial:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[LaurentPolynomial]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check_order(self, other: 'TruncatedEgf') -> None:
        if self.order != other.order:
            raise OrderMismatch(f"Series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: 'TruncatedEgf') -> 'TruncatedEgf':
        if not isinstance(other, TruncatedEgf):
            return NotImplemented
        self._check_order(other)
        return TruncatedEgf(tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'TruncatedEgf':
        return TruncatedEgf(tuple(-p for p in self.coeffs))

    def __sub__(self, other: 'TruncatedEgf') -> 'TruncatedEgf':
        if not isinstance(other, TruncatedEgf):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> 'TruncatedEgf':
        if isinstance(other, TruncatedEgf):
            return mul_series(self, other)
        scalar = as_polynomial(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def scale(self, c: Any) -> 'TruncatedEgf':
        factor = as_polynomial(c)
        return TruncatedEgf(tuple(factor * p for p in self.coeffs))

    def substitute(self, bindings: Mapping[str, Any]) -> 'TruncatedEgf':
        return TruncatedEgf(tuple(p.substitute(bindings) for p in self.coeffs))

    def truncate(self, order: int) -> 'TruncatedEgf':
        if order > self.order:
            raise OrderMismatch(f"Cannot extend a series of order {self.order} to {order}")
        return TruncatedEgf(self.coeffs[:order + 1])

    def to_text(self) -> str:
        return '\n'.join(f"{n}: {p}" for n, p in enumerate(self.coeffs))

    def to_json(self) -> List[str]:
        return [p.to_text() for p in self.coeffs]


Factor = Union[TruncatedEgf, LaurentPolynomial, int]


def gen_from_grammar(g: Grammar, w: LaurentPolynomial, order: int) -> TruncatedEgf:
    """gen(w, t) = sum D^n(w) t^n/n! up to t^order."""
    coeffs = [w]
    for _ in range(order):
        coeffs.append(g.derive(coeffs[-1]))
    return TruncatedEgf(tuple(coeffs))


def exp_series(c: Any, order: int) -> TruncatedEgf:
    """e^{ct}: the n-th coefficient is c^n."""
    base = as_polynomial(c)
    coeffs = [LaurentPolynomial.one()]
    for _ in range(order):
        coeffs.append(coeffs[-1] * base)
    return TruncatedEgf(tuple(coeffs))


def mul_series(p: TruncatedEgf, q: TruncatedEgf) -> TruncatedEgf:
    p._check_order(q)
    coeffs = []
    for n in range(p.order + 1):
        total = LaurentPolynomial.zero()
        for k in range(n + 1):
            if p[k] and q[n - k]:
                total = total + comb(n, k) * (p[k] * q[n - k])
        coeffs.append(total)
    return TruncatedEgf(tuple(coeffs))


def expand(parts: Sequence[Factor], order: int) -> TruncatedEgf:
    """Multiply series and polynomial prefactors out to the given order."""
    result = TruncatedEgf.constant(1, order)
    for part in parts:
        if isinstance(part, TruncatedEgf) and part.order != order:
            raise OrderMismatch(f"Factor of order {part.order} in a product of order {order}")
        result = result * part
    return result


def common_order(*sides: Sequence[Factor]) -> int:
    orders = {part.order for side in sides for part in side if isinstance(part, TruncatedEgf)}
    if not orders:
        raise ValueError("At least one factor must be a truncated series")
    if len(orders) > 1:
        raise OrderMismatch(f"Factors have different orders: {sorted(orders)}")
    return orders.pop()


def crossmul_mismatches(lhs_parts: Sequence[Factor], rhs_parts: Sequence[Factor]) -> List[int]:
    """Indices n at which the expanded sides differ."""
    order = common_order(lhs_parts, rhs_parts)
    lhs = expand(lhs_parts, order)
    rhs = expand(rhs_parts, order)
    mismatches = [n for n in range(order + 1) if lhs[n] != rhs[n]]
    if mismatches:
        logger.debug("cross-multiplied sides differ at t^n/n! for n in %s", mismatches)
    return mismatches


def check_identity_crossmul(lhs_parts: Sequence[Factor], rhs_parts: Sequence[Factor]) -> bool:
    return not crossmul_mismatches(lhs_parts, rhs_parts)
