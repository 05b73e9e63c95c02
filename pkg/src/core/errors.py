"""
Exception hierarchy for grammar calculus and permutation verification.
"""


class GrammarCalcError(ValueError):
    """Base class for every domain error raised by the package."""


class NonInvertibleSubstitution(GrammarCalcError):
    """A variable with a negative exponent was bound to a non-monomial."""


class NonExactOperation(GrammarCalcError):
    """A negative power of a polynomial that is not a single monomial."""


class OrderMismatch(GrammarCalcError):
    """Truncated series of different orders were combined."""


class SizeTooLarge(GrammarCalcError):
    """An exhaustive enumeration was requested beyond the size guard."""


class UnknownStatistic(GrammarCalcError):
    pass


class MalformedPermutation(GrammarCalcError):
    pass


class MalformedCycles(GrammarCalcError):
    """Cycles do not partition [n] or are not in canonical order."""


class SlotOutOfRange(GrammarCalcError):
    pass


class MalformedTree(GrammarCalcError):
    pass


class NoSuchLeaf(GrammarCalcError):
    pass


class Incoherent(GrammarCalcError):
    """A permutation and a tree are not a synchronized pair."""


class UnknownGrammar(GrammarCalcError):
    pass


class UnknownIdentity(GrammarCalcError):
    pass


class ParseError(GrammarCalcError):
    pass
