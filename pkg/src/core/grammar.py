"""
Context-free grammars (variable -> polynomial substitution rules) and the
formal derivative they induce.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Mapping

from .errors import UnknownGrammar
from .poly import VARIABLES, LaurentPolynomial, Monomial, var

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Grammar:
    """Substitution rules; a variable without a rule is a constant."""
    name: str
    rules: Mapping[str, LaurentPolynomial] = field(default_factory=dict)

    def __post_init__(self):
        for lhs, image in self.rules.items():
            if lhs not in VARIABLES:
                raise ValueError(f"Rule for unknown variable {lhs!r} in grammar {self.name}")
            if not isinstance(image, LaurentPolynomial):
                raise TypeError(f"Rule image for {lhs!r} must be a LaurentPolynomial")

    @classmethod
    def from_text(cls, text: str, name: str = 'custom') -> 'Grammar':
        from ..utils.parsing import parse_grammar_rules
        return cls(name, parse_grammar_rules(text))

    @classmethod
    def from_file(cls, path: Path) -> 'Grammar':
        if not path.exists():
            raise FileNotFoundError(f"Grammar file not found: {path}")
        return cls.from_text(path.read_text(), name=path.stem)

    def rule(self, variable: str) -> LaurentPolynomial:
        return self.rules.get(variable, LaurentPolynomial.zero())

    def derive(self, p: LaurentPolynomial) -> LaurentPolynomial:
        """Apply D once: linear, Leibniz on products, D(v^k) = k v^(k-1) D(v)."""
        acc: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono, coeff in p.terms.items():
            for variable, exp in mono.powers:
                image = self.rules.get(variable)
                if not image:
                    continue
                lowered = mono * Monomial.of(**{variable: -1})
                for image_mono, image_coeff in image.terms.items():
                    acc[lowered * image_mono] += coeff * exp * image_coeff
        return LaurentPolynomial(acc)

    def derive_n(self, p: LaurentPolynomial, n: int) -> LaurentPolynomial:
        if n < 0:
            raise ValueError(f"Derivative order must be nonnegative, got {n}")
        result = p
        for step in range(n):
            result = self.derive(result)
            logger.debug("%s: D^%d has %d terms", self.name, step + 1, len(result))
        return result

    def is_constant(self, p: LaurentPolynomial) -> bool:
        return self.derive(p).is_zero()

    def to_text(self) -> str:
        return '\n'.join(f"{lhs} -> {self.rules[lhs]}" for lhs in VARIABLES if lhs in self.rules)


_a, _b, _x, _y, _z = (var(name) for name in VARIABLES)

DUMONT = Grammar('dumont', {
    'a': _a * _z,
    'z': _x * _y,
    'x': _x * _y,
    'y': _x * _y,
})

DUMONT_B = Grammar('dumont-b', {
    'a': _a * _z,
    'b': _x * _y,
    'x': _x * _y,
    'y': _x * _y,
    'z': _x * _y,
})

EULERIAN = Grammar('eulerian', {
    'x': _x * _y,
    'y': _x * _y,
})

BUILTIN_GRAMMARS: Dict[str, Grammar] = {g.name: g for g in (DUMONT, DUMONT_B, EULERIAN)}


def get_grammar(name: str) -> Grammar:
    try:
        return BUILTIN_GRAMMARS[name]
    except KeyError:
        raise UnknownGrammar(
            f"Unknown grammar {name!r}; choose from {', '.join(sorted(BUILTIN_GRAMMARS))}"
        ) from None


def derive(g: Grammar, p: LaurentPolynomial) -> LaurentPolynomial:
    return g.derive(p)


def derive_n(g: Grammar, p: LaurentPolynomial, n: int) -> LaurentPolynomial:
    return g.derive_n(p, n)


def is_constant(g: Grammar, p: LaurentPolynomial) -> bool:
    return g.is_constant(p)


def eulerian(n: int) -> LaurentPolynomial:
    """A_n(x, y) = D^n(x) under {x -> xy, y -> xy}; A_0 = x."""
    return EULERIAN.derive_n(_x, n)
