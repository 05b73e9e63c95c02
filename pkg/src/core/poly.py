"""
Exact multivariate Laurent polynomials.
Variables come from the fixed universe a, b, x, y, z; exponents are signed
integers and coefficients are arbitrary-precision Fractions.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Set, Tuple, Union

from .errors import NonExactOperation, NonInvertibleSubstitution

VARIABLES: Tuple[str, ...] = ('a', 'b', 'x', 'y', 'z')

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Monomial:
    """Sparse product of variable powers; zero exponents are never stored."""
    powers: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        names = [var for var, _ in self.powers]
        for var, exp in self.powers:
            if var not in VARIABLES:
                raise ValueError(f"Unknown variable: {var!r}")
            if exp == 0:
                raise ValueError(f"Zero exponent stored for {var!r}")
        if names != sorted(set(names)):
            raise ValueError(f"Non-canonical monomial: {self.powers}")

    @classmethod
    def from_exponents(cls, exponents: Mapping[str, int]) -> 'Monomial':
        return cls(tuple(sorted((var, exp) for var, exp in exponents.items() if exp != 0)))

    @classmethod
    def of(cls, **exponents: int) -> 'Monomial':
        return cls.from_exponents(exponents)

    @property
    def exponents(self) -> Dict[str, int]:
        return dict(self.powers)

    def exponent(self, var: str) -> int:
        return self.exponents.get(var, 0)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        """Exponent vector in variable order; terms print in ascending key order."""
        exps = self.exponents
        return tuple(exps.get(var, 0) for var in VARIABLES)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        exps = self.exponents
        for var, exp in other.powers:
            exps[var] = exps.get(var, 0) + exp
        return Monomial.from_exponents(exps)

    def __pow__(self, k: int) -> 'Monomial':
        return Monomial.from_exponents({var: exp * k for var, exp in self.powers})

    def inverse(self) -> 'Monomial':
        return Monomial(tuple((var, -exp) for var, exp in self.powers))

    def __str__(self) -> str:
        if not self.powers:
            return '1'
        return ''.join(var if exp == 1 else f"{var}^{exp}" for var, exp in self.powers)


ONE_MONOMIAL = Monomial()


class LaurentPolynomial:
    """Immutable polynomial with canonical term map (no zero coefficients)."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self._terms: Dict[Monomial, Fraction] = {}
        self._hash: Optional[int] = None
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    self._terms[mono] = Fraction(coeff)

    @classmethod
    def zero(cls) -> 'LaurentPolynomial':
        return cls()

    @classmethod
    def one(cls) -> 'LaurentPolynomial':
        return cls({ONE_MONOMIAL: 1})

    @classmethod
    def constant(cls, value: Scalar) -> 'LaurentPolynomial':
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def variable(cls, name: str) -> 'LaurentPolynomial':
        return cls({Monomial.of(**{name: 1}): 1})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> 'LaurentPolynomial':
        return cls({mono: coeff})

    @classmethod
    def parse(cls, text: str) -> 'LaurentPolynomial':
        """Parse `a*x^-1`, `z - y`, `3*x*y + x^2` style text."""
        from ..utils.parsing import parse_polynomial
        return parse_polynomial(text)

    # -- inspection -----------------------------------------------------

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in the deterministic print order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key)

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> Set[str]:
        return {var for mono in self._terms for var, _ in mono.powers}

    def coefficient_of(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    # -- arithmetic -----------------------------------------------------

    def __eq__(self, other: Any) -> bool:
        other = as_polynomial(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Any) -> 'LaurentPolynomial':
        other = as_polynomial(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc[mono] = acc.get(mono, 0) + coeff
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPolynomial':
        return LaurentPolynomial({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: Any) -> 'LaurentPolynomial':
        other = as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> 'LaurentPolynomial':
        other = as_polynomial(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> 'LaurentPolynomial':
        other = as_polynomial(other)
        if other is None:
            return NotImplemented
        acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                acc[m1 * m2] += c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'LaurentPolynomial':
        if k < 0:
            if not self.is_monomial():
                raise NonExactOperation(f"Cannot raise non-monomial {self} to power {k}")
            (mono, coeff), = self._terms.items()
            return LaurentPolynomial({mono.inverse() ** -k: (1 / coeff) ** -k})
        result = LaurentPolynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def substitute(self, bindings: Mapping[str, Any]) -> 'LaurentPolynomial':
        """Simultaneous substitution of polynomials for variables."""
        images: Dict[str, LaurentPolynomial] = {}
        for var, value in bindings.items():
            if var not in VARIABLES:
                raise ValueError(f"Unknown variable: {var!r}")
            image = as_polynomial(value)
            if image is None:
                raise TypeError(f"Cannot bind {var!r} to {value!r}")
            images[var] = image

        powers: Dict[Tuple[str, int], LaurentPolynomial] = {}
        acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono, coeff in self._terms.items():
            term = LaurentPolynomial.constant(coeff)
            kept: Dict[str, int] = {}
            for var, exp in mono.powers:
                if var not in images:
                    kept[var] = exp
                    continue
                if exp < 0 and not images[var].is_monomial():
                    raise NonInvertibleSubstitution(
                        f"{var} occurs with exponent {exp} but is bound to {images[var]}"
                    )
                if (var, exp) not in powers:
                    powers[(var, exp)] = images[var] ** exp
                term = term * powers[(var, exp)]
            term = term * LaurentPolynomial.monomial(Monomial.from_exponents(kept))
            for m, c in term._terms.items():
                acc[m] += c
        return LaurentPolynomial(acc)

    # -- rendering ------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return '0'
        pieces = []
        for mono, coeff in self.items():
            magnitude = abs(coeff)
            body = str(mono) if mono.powers else ''
            if not body:
                text = _format_scalar(magnitude)
            elif magnitude == 1:
                text = body
            elif magnitude.denominator == 1:
                text = f"{magnitude.numerator}{body}"
            else:
                text = f"({magnitude}){body}"
            pieces.append((coeff < 0, text))

        negative, text = pieces[0]
        rendered = ('-' if negative else '') + text
        for negative, text in pieces[1:]:
            rendered += f" {'-' if negative else '+'} {text}"
        return rendered

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {
                'coeff_num': coeff.numerator,
                'coeff_den': coeff.denominator,
                'exponents': mono.exponents,
            }
            for mono, coeff in self.items()
        ]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_text()!r})"


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


def as_polynomial(value: Any) -> Optional[LaurentPolynomial]:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return LaurentPolynomial.constant(value)
    if isinstance(value, Monomial):
        return LaurentPolynomial.monomial(value)
    return None


def var(name: str) -> LaurentPolynomial:
    return LaurentPolynomial.variable(name)


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p + q


def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p * q


def substitute(p: LaurentPolynomial, bindings: Mapping[str, Any]) -> LaurentPolynomial:
    return p.substitute(bindings)


def coefficient_of(p: LaurentPolynomial, mono: Monomial) -> Fraction:
    return p.coefficient_of(mono)


def from_exponent_counts(counts: Mapping[Tuple[int, ...], int]) -> LaurentPolynomial:
    """Build a polynomial from {exponent vector over VARIABLES: coefficient}."""
    return LaurentPolynomial({
        Monomial.from_exponents(dict(zip(VARIABLES, vector))): coeff
        for vector, coeff in counts.items()
    })
