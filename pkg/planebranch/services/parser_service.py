"""Expression and field parsing for the command line and the corpus.

Grammar: integer literals, X, Y, + - * ^ / and parentheses.  Over an
extension field the generator prints as ``u`` and parses back.  Implicit
multiplication is rejected; division is only by constants.
"""

import logging
import re
from typing import List, Optional, Sequence, Tuple

from planebranch.kernel.algebra import BivariatePolynomial
from planebranch.kernel.field import FieldSpec
from planebranch.utils.errors import (
    DivisionByZero,
    ExpressionSyntaxError,
    FieldMismatch,
    UnknownSymbolError,
)

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(text, start, f"unexpected character {text[start]!r}")
        if match.group(1):
            tokens.append(("int", match.group(1), match.start(1)))
        elif match.group(2):
            tokens.append(("name", match.group(2), match.start(2)))
        else:
            op = "^" if match.group(3) == "**" else match.group(3)
            tokens.append(("op", op, match.start(3)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, spec: FieldSpec):
        self.text = text
        self.spec = spec
        self.tokens = tokenize(text)
        self.index = 0
        self.reduced_literals: List[str] = []
        symbols = ["X", "Y"] + (["u"] if spec.is_extension else [])
        self.symbols = symbols

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _next(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _fail(self, issue: str, token: Optional[Token] = None) -> ExpressionSyntaxError:
        position = (token or self._peek())[2]
        return ExpressionSyntaxError(self.text, position, issue)

    def parse(self) -> BivariatePolynomial:
        if self._peek()[0] == "end":
            raise self._fail("empty expression")
        result = self._sum()
        if self._peek()[0] != "end":
            token = self._peek()
            if token[0] in ("int", "name") or token[1] == "(":
                raise self._fail("implicit multiplication is not allowed", token)
            raise self._fail(f"unexpected {token[1]!r}", token)
        return result

    def _sum(self) -> BivariatePolynomial:
        result = self._product()
        while self._peek()[:2] in (("op", "+"), ("op", "-")):
            op = self._next()[1]
            rhs = self._product()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _product(self) -> BivariatePolynomial:
        result = self._unary()
        while self._peek()[:2] in (("op", "*"), ("op", "/")):
            token = self._next()
            rhs = self._unary()
            if token[1] == "*":
                result = result * rhs
                continue
            if rhs.degree() > 0:
                raise self._fail("division is only by constants", token)
            c = rhs.coefficient(0, 0)
            if not c:
                raise DivisionByZero("expression")
            result = result.scale(self.spec.inv(c))
        return result

    def _unary(self) -> BivariatePolynomial:
        if self._peek()[:2] == ("op", "-"):
            self._next()
            return -self._unary()
        if self._peek()[:2] == ("op", "+"):
            self._next()
            return self._unary()
        return self._power()

    def _power(self) -> BivariatePolynomial:
        base = self._atom()
        if self._peek()[:2] == ("op", "^"):
            self._next()
            token = self._next()
            if token[0] != "int":
                raise self._fail("exponent must be a non-negative integer literal", token)
            base = base.pow(int(token[1]))
        return base

    def _atom(self) -> BivariatePolynomial:
        token = self._next()
        kind, value, _ = token
        spec = self.spec
        if kind == "int":
            reduced = spec.from_int(int(value))
            if int(value) and not reduced:
                self.reduced_literals.append(value)
                logger.warning("literal %s reduces to 0 in %s", value, spec)
            return BivariatePolynomial.constant(spec, reduced)
        if kind == "name":
            if value == "X":
                return BivariatePolynomial.x(spec)
            if value == "Y":
                return BivariatePolynomial.y(spec)
            if value == "u" and spec.is_extension:
                return BivariatePolynomial.constant(spec, spec.generator())
            raise UnknownSymbolError(value, self.symbols)
        if value == "(":
            inner = self._sum()
            closing = self._next()
            if closing[0] in ("int", "name") or closing[1] == "(":
                raise self._fail("implicit multiplication is not allowed", closing)
            if closing[1] != ")":
                raise self._fail("missing closing parenthesis", closing)
            return inner
        if kind == "end":
            raise self._fail("unexpected end of expression", token)
        raise self._fail(f"unexpected {value!r}", token)


class ParserService:
    """Turns user text into fields and polynomials"""

    def parse_field(self, text: str, extension: Optional[int] = None) -> FieldSpec:
        spec = FieldSpec.parse(text)
        if extension and extension > 1:
            if spec.extension_degree != 1 and spec.extension_degree != extension:
                raise FieldMismatch(str(spec), f"extension degree {extension}")
            spec = spec.with_extension(extension)
        return spec

    def parse_expression(self, text: str, spec: FieldSpec) -> BivariatePolynomial:
        parser = _Parser(text, spec)
        return parser.parse()

    def parse_expression_with_notes(self, text: str, spec: FieldSpec) -> Tuple[BivariatePolynomial, List[str]]:
        """The polynomial and the literals that reduced to zero"""
        parser = _Parser(text, spec)
        poly = parser.parse()
        return poly, parser.reduced_literals

    def parse_factors(self, lines: Sequence[str], spec: FieldSpec) -> List[BivariatePolynomial]:
        factors = []
        for line in lines:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            factors.append(self.parse_expression(stripped, spec))
        return factors


def parse_expression(text: str, spec: FieldSpec) -> BivariatePolynomial:
    return ParserService().parse_expression(text, spec)
