"""A small expression language naming the supported ring constructions.

Grammar (whitespace-insensitive, keywords case-sensitive)::

    expr := term ( "x" term )*
    term := "Z" "(" INT ")" | "GF" "(" INT ")"
          | "M" "(" INT "," expr ")" | "UT" "(" INT "," expr ")"
          | "B" "(" INT ")" | "Prod" "(" expr ("," expr)* ")"
          | "(" expr ")"
    INT  := decimal integer >= 1

The infix "x" is left-associative and a chain flattens into a single
product node: ``a x b x c`` is ``Prod(a, b, c)``.  Parsing and ring
construction are separate phases — ``GF(6)`` parses fine and only fails
(not a prime power) when the AST is built into a ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .rings import (
    Ring,
    make_boolean,
    make_gf,
    make_matrix_ring,
    make_product,
    make_triangular_ring,
    make_zn,
)


class RingExpr:
    """Base class for expression AST nodes; all nodes are frozen values."""


@dataclass(frozen=True)
class ZnExpr(RingExpr):
    n: int


@dataclass(frozen=True)
class GFExpr(RingExpr):
    q: int


@dataclass(frozen=True)
class MExpr(RingExpr):
    n: int
    base: RingExpr


@dataclass(frozen=True)
class UTExpr(RingExpr):
    n: int
    base: RingExpr


@dataclass(frozen=True)
class BExpr(RingExpr):
    k: int


@dataclass(frozen=True)
class ProdExpr(RingExpr):
    factors: tuple[RingExpr, ...]


# ---------------------------------------------------------------------------
# tokenizer

_PUNCT = {"(": "lparen", ")": "rparen", ",": "comma"}
_KEYWORDS = {"Z", "GF", "M", "UT", "B", "Prod", "x"}


@dataclass(frozen=True)
class _Token:
    kind: str   # one of: Z GF M UT B Prod x lparen rparen comma int end
    text: str
    column: int  # 1-based position in the original text


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, col))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], col))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word not in _KEYWORDS:
                raise ParseError(
                    f"unknown keyword {word!r} at column {col}", col,
                    expected=tuple(sorted(_KEYWORDS - {"x"})))
            tokens.append(_Token(word, word, col))
            i = j
        else:
            raise ParseError(
                f"unexpected character {ch!r} at column {col}", col,
                expected=("Z", "GF", "M", "UT", "B", "Prod", "("))
    tokens.append(_Token("end", "", n + 1))
    return tokens


# ---------------------------------------------------------------------------
# recursive-descent parser

_TERM_STARTS = ("Z", "GF", "M", "UT", "B", "Prod", "(")


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str, expected: tuple[str, ...]) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            what = tok.text or "end of input"
            raise ParseError(
                f"expected {' or '.join(expected)} but found {what!r} at column {tok.column}",
                tok.column, expected=expected)
        self.pos += 1
        return tok

    def parse_int(self) -> int:
        tok = self.take("int", ("positive integer",))
        value = int(tok.text)
        if value < 1:
            raise ParseError(
                f"integer arguments must be >= 1, got {value} at column {tok.column}",
                tok.column, expected=("positive integer",))
        return value

    def parse_expr(self) -> RingExpr:
        terms = [self.parse_term()]
        while self.peek().kind == "x":
            self.pos += 1
            terms.append(self.parse_term())
        if len(terms) == 1:
            return terms[0]
        return ProdExpr(tuple(terms))

    def parse_term(self) -> RingExpr:
        tok = self.peek()
        if tok.kind == "lparen":
            self.pos += 1
            inner = self.parse_expr()
            self.take("rparen", (")",))
            return inner
        if tok.kind in ("Z", "GF", "B"):
            self.pos += 1
            self.take("lparen", ("(",))
            value = self.parse_int()
            self.take("rparen", (")",))
            return {"Z": ZnExpr, "GF": GFExpr, "B": BExpr}[tok.kind](value)
        if tok.kind in ("M", "UT"):
            self.pos += 1
            self.take("lparen", ("(",))
            size = self.parse_int()
            self.take("comma", (",",))
            base = self.parse_expr()
            self.take("rparen", (")",))
            return (MExpr if tok.kind == "M" else UTExpr)(size, base)
        if tok.kind == "Prod":
            self.pos += 1
            self.take("lparen", ("(",))
            factors = [self.parse_expr()]
            while self.peek().kind == "comma":
                self.pos += 1
                factors.append(self.parse_expr())
            self.take("rparen", (")",))
            return ProdExpr(tuple(factors))
        what = tok.text or "end of input"
        raise ParseError(
            f"expected a ring term but found {what!r} at column {tok.column}",
            tok.column, expected=_TERM_STARTS)


def parse_ring_expr(text: str) -> RingExpr:
    """Parse the expression language into an AST; no rings are built."""
    parser = _Parser(_tokenize(text))
    ast = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(
            f"unexpected trailing input {tok.text!r} at column {tok.column}",
            tok.column, expected=("x", "end of input"))
    return ast


# ---------------------------------------------------------------------------
# pretty-printing and construction


def pretty_expr(ast: RingExpr) -> str:
    """Canonical text for an AST; re-parsing it yields an equal AST."""
    if isinstance(ast, ZnExpr):
        return f"Z({ast.n})"
    if isinstance(ast, GFExpr):
        return f"GF({ast.q})"
    if isinstance(ast, BExpr):
        return f"B({ast.k})"
    if isinstance(ast, MExpr):
        return f"M({ast.n},{pretty_expr(ast.base)})"
    if isinstance(ast, UTExpr):
        return f"UT({ast.n},{pretty_expr(ast.base)})"
    if isinstance(ast, ProdExpr):
        return "Prod(" + ",".join(pretty_expr(f) for f in ast.factors) + ")"
    raise TypeError(f"not a ring expression node: {ast!r}")


def build_ring(ast: RingExpr) -> Ring:
    """Construct the ring an AST names; construction errors surface here."""
    if isinstance(ast, ZnExpr):
        return make_zn(ast.n)
    if isinstance(ast, GFExpr):
        return make_gf(ast.q)
    if isinstance(ast, BExpr):
        return make_boolean(ast.k)
    if isinstance(ast, MExpr):
        return make_matrix_ring(ast.n, build_ring(ast.base))
    if isinstance(ast, UTExpr):
        return make_triangular_ring(ast.n, build_ring(ast.base))
    if isinstance(ast, ProdExpr):
        return make_product([build_ring(f) for f in ast.factors])
    raise TypeError(f"not a ring expression node: {ast!r}")


def parse_ring(text: str) -> Ring:
    """Parse and construct in one step (the CLI's --ring path)."""
    return build_ring(parse_ring_expr(text))
