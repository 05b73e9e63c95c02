"""
Text parsers for polynomials, grammar rule files, tree serializations and
cycle notation.
"""
from typing import Dict, List, Tuple, Union

import lark
from lark import Transformer

from ..core.errors import GrammarCalcError, ParseError
from ..core.poly import VARIABLES, LaurentPolynomial

polynomial_grammar = r"""
?start: sum

?sum: product
    | sum "+" product   -> add
    | sum "-" product   -> sub

?product: unary
    | product "*" unary -> mul
    | product "/" unary -> div

?unary: power
    | "-" unary         -> neg

?power: atom
    | atom "^" exponent -> pow

?exponent: INT          -> positive_exponent
    | "-" INT           -> negative_exponent

?atom: VARIABLE         -> variable
    | INT               -> number
    | "(" sum ")"

VARIABLE: "a" | "b" | "x" | "y" | "z"

%import common.INT
%import common.WS
%ignore WS
"""

tree_grammar = r"""
?start: node

node: "(" INT child child ")"

?child: node
    | LABEL             -> leaf

LABEL: "a" | "x" | "y" | "z"

%import common.INT
%import common.WS
%ignore WS
"""

cycle_grammar = r"""
?start: cycles

cycles: cycle+

cycle: "(" INT+ ")"

%import common.INT
%import common.WS
%ignore WS
"""

NestedTree = Union[str, Tuple[int, 'NestedTree', 'NestedTree']]


class _PolynomialBuilder(Transformer):
    def variable(self, items):
        return LaurentPolynomial.variable(str(items[0]))

    def number(self, items):
        return LaurentPolynomial.constant(int(items[0]))

    def add(self, items):
        left, right = items
        return left + right

    def sub(self, items):
        left, right = items
        return left - right

    def mul(self, items):
        left, right = items
        return left * right

    def div(self, items):
        left, right = items
        if len(right) != 1 or right.variables():
            raise ParseError(f"Can only divide by a nonzero number, got {right}")
        (_, coeff), = right.items()
        return left * LaurentPolynomial.constant(1 / coeff)

    def neg(self, items):
        return -items[0]

    def positive_exponent(self, items):
        return int(items[0])

    def negative_exponent(self, items):
        return -int(items[0])

    def pow(self, items):
        base, exponent = items
        return base ** exponent


class _TreeBuilder(Transformer):
    def node(self, items):
        vertex, left, right = items
        return (int(vertex), left, right)

    def leaf(self, items):
        return str(items[0])


class _CycleBuilder(Transformer):
    def cycles(self, items):
        return list(items)

    def cycle(self, items):
        return tuple(int(v) for v in items)


def _transform(parser: lark.Lark, builder: Transformer, text: str, what: str):
    try:
        tree = parser.parse(text)
    except lark.exceptions.LarkError as exc:
        raise ParseError(f"Cannot parse {what} {text!r}: {exc}") from exc
    try:
        return builder.transform(tree)
    except lark.exceptions.VisitError as exc:
        if isinstance(exc.orig_exc, GrammarCalcError):
            raise ParseError(f"Cannot parse {what} {text!r}: {exc.orig_exc}") from exc.orig_exc
        raise


def parse_polynomial(text: str) -> LaurentPolynomial:
    """Parse a polynomial such as `a*x^-1*(z - y)^2` (explicit `*` required)."""
    return _transform(parse_polynomial.parser, _PolynomialBuilder(), text, 'polynomial')


parse_polynomial.parser = lark.Lark(polynomial_grammar, parser='lalr')


def parse_tree_text(text: str) -> NestedTree:
    """Parse `(1 z (2 z a))` into nested `(vertex, left, right)` tuples."""
    return _transform(parse_tree_text.parser, _TreeBuilder(), text, 'tree')


parse_tree_text.parser = lark.Lark(tree_grammar, parser='lalr')


def parse_cycles_text(text: str) -> List[Tuple[int, ...]]:
    """Parse `(1 8 4 9 6)(2)(3 5)` into one tuple per cycle, as written."""
    return _transform(parse_cycles_text.parser, _CycleBuilder(), text, 'cycles')


parse_cycles_text.parser = lark.Lark(cycle_grammar, parser='lalr')


def parse_grammar_rules(text: str) -> Dict[str, LaurentPolynomial]:
    """Parse one `var -> polynomial` rule per line; `#` starts a comment."""
    rules: Dict[str, LaurentPolynomial] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        lhs, arrow, rhs = line.partition('->')
        lhs = lhs.strip()
        if not arrow:
            raise ParseError(f"line {lineno}: expected 'var -> polynomial', got {raw!r}")
        if lhs not in VARIABLES:
            raise ParseError(f"line {lineno}: left-hand side must be one of {', '.join(VARIABLES)}")
        if lhs in rules:
            raise ParseError(f"line {lineno}: duplicate rule for {lhs}")
        try:
            rules[lhs] = parse_polynomial(rhs)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return rules
