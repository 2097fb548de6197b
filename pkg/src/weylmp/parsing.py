"""Parser for Weyl-algebra expressions.

Grammar (multiplication is always explicit; juxtaposition like ``pq`` is
rejected so multi-letter identifiers cannot be misread):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | atom ('^' exponent)?
    atom     := 'p' | 'q' | 'T' | rational | '(' expr ')' | '[' expr ',' expr ']'
    rational := INT ('/' INT)?
    exponent := INT | '(' ('+' | '-')? INT ')'

``T`` denotes the symmetric element pq + qp; the commutator bracket
``[a, b]`` denotes a*b - b*a.  Exponents must be non-negative integers.
Every AST node keeps its source position for error messages, and
``lower`` folds a tree into canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weyl import P, Q, T_ELEMENT, WeylElement, monomial


class ParseError(ValueError):
    """Lexical or syntactic error, carrying a 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, SYMBOL, END
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, column = 1, 1
    index = 0
    while index < len(source):
        char = source[index]
        if char == "\n":
            line += 1
            column = 1
            index += 1
            continue
        if char.isspace():
            column += 1
            index += 1
            continue
        if char.isalpha():
            start = index
            while index < len(source) and source[index].isalnum():
                index += 1
            text = source[start:index]
            tokens.append(Token("NAME", text, line, column))
            column += len(text)
            continue
        if char.isdigit():
            start = index
            while index < len(source) and source[index].isdigit():
                index += 1
            text = source[start:index]
            tokens.append(Token("INT", text, line, column))
            column += len(text)
            continue
        if char in "+-*/^()[],":
            tokens.append(Token("SYMBOL", char, line, column))
            column += 1
            index += 1
            continue
        raise ParseError(f"unexpected character {char!r}", line, column)
    tokens.append(Token("END", "", line, column))
    return tokens


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Expr:
    line: int
    column: int


@dataclass(frozen=True)
class Generator(Expr):
    name: str  # "p" or "q"


@dataclass(frozen=True)
class SymmetricT(Expr):
    pass


@dataclass(frozen=True)
class RationalLiteral(Expr):
    value: Fraction


@dataclass(frozen=True)
class Sum(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Difference(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Product(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Commutator(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Negation(Expr):
    inner: Expr


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.position = 0

    def peek(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.kind == "SYMBOL" and token.text == text:
            return self.advance()
        shown = token.text or "end of input"
        raise ParseError(f"expected {text!r}, found {shown!r}", token.line, token.column)

    def at_symbol(self, *texts: str) -> bool:
        token = self.peek()
        return token.kind == "SYMBOL" and token.text in texts

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.at_symbol("+", "-"):
            op = self.advance()
            right = self.parse_term()
            cls = Sum if op.text == "+" else Difference
            node = cls(node.line, node.column, node, right)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.at_symbol("*"):
            self.advance()
            right = self.parse_factor()
            node = Product(node.line, node.column, node, right)
        return node

    def parse_factor(self) -> Expr:
        if self.at_symbol("-"):
            token = self.advance()
            return Negation(token.line, token.column, self.parse_factor())
        node = self.parse_atom()
        if self.at_symbol("^"):
            self.advance()
            exponent = self.parse_exponent()
            node = Power(node.line, node.column, node, exponent)
        return node

    def parse_exponent(self) -> int:
        token = self.peek()
        if token.kind == "INT":
            self.advance()
            return int(token.text)
        if self.at_symbol("("):
            self.advance()
            sign = 1
            inner = self.peek()
            if self.at_symbol("+", "-"):
                sign = -1 if inner.text == "-" else 1
                self.advance()
            digits = self.peek()
            if digits.kind != "INT":
                raise ParseError(
                    "exponent must be an integer", digits.line, digits.column
                )
            self.advance()
            if self.at_symbol("/"):
                slash = self.peek()
                raise ParseError(
                    "exponent must be an integer, not a fraction", slash.line, slash.column
                )
            self.expect(")")
            value = sign * int(digits.text)
            if value < 0:
                raise ParseError(f"negative exponent {value}", token.line, token.column)
            return value
        shown = token.text or "end of input"
        raise ParseError(
            f"expected a non-negative integer exponent, found {shown!r}",
            token.line,
            token.column,
        )

    def parse_atom(self) -> Expr:
        token = self.peek()
        if token.kind == "NAME":
            self.advance()
            if token.text in ("p", "q"):
                return Generator(token.line, token.column, token.text)
            if token.text == "T":
                return SymmetricT(token.line, token.column)
            raise ParseError(
                f"unknown symbol {token.text!r} (multiplication must be explicit, e.g. p*q)",
                token.line,
                token.column,
            )
        if token.kind == "INT":
            self.advance()
            numerator = int(token.text)
            if self.at_symbol("/"):
                self.advance()
                denom_token = self.peek()
                if denom_token.kind != "INT":
                    shown = denom_token.text or "end of input"
                    raise ParseError(
                        f"expected integer denominator, found {shown!r}",
                        denom_token.line,
                        denom_token.column,
                    )
                self.advance()
                denominator = int(denom_token.text)
                if denominator == 0:
                    raise ParseError(
                        "zero denominator", denom_token.line, denom_token.column
                    )
                return RationalLiteral(
                    token.line, token.column, Fraction(numerator, denominator)
                )
            return RationalLiteral(token.line, token.column, Fraction(numerator))
        if self.at_symbol("("):
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if self.at_symbol("["):
            self.advance()
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return Commutator(token.line, token.column, left, right)
        shown = token.text or "end of input"
        raise ParseError(f"expected an expression, found {shown!r}", token.line, token.column)


def parse(source: str) -> Expr:
    """Parse source text into an AST; raises ParseError with position."""
    parser = _Parser(tokenize(source))
    node = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "END":
        raise ParseError(
            f"unexpected trailing input {trailing.text!r}", trailing.line, trailing.column
        )
    return node


def lower(node: Expr) -> WeylElement:
    """Fold an AST into the canonical form of the element it denotes."""
    if isinstance(node, Generator):
        return P if node.name == "p" else Q
    if isinstance(node, SymmetricT):
        return T_ELEMENT
    if isinstance(node, RationalLiteral):
        return monomial(0, 0, node.value)
    if isinstance(node, Sum):
        return lower(node.left) + lower(node.right)
    if isinstance(node, Difference):
        return lower(node.left) - lower(node.right)
    if isinstance(node, Product):
        return lower(node.left) * lower(node.right)
    if isinstance(node, Power):
        return lower(node.base) ** node.exponent
    if isinstance(node, Commutator):
        left, right = lower(node.left), lower(node.right)
        return left * right - right * left
    if isinstance(node, Negation):
        return -lower(node.inner)
    raise TypeError(f"unknown AST node {node!r}")


def parse_element(source: str) -> WeylElement:
    """Parse and lower in one step."""
    return lower(parse(source))
