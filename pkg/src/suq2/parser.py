"""Text syntax for algebra elements.

Generators are ``a`` (alpha) and ``c`` (gamma); the involution is written
``a^*`` or, when nothing multiplicative follows, ``a*``.  Juxtaposition and
``*`` both multiply; ``/`` divides by a nonzero scalar.  Scalars are built
from integers and ``q`` with integer or half-integer exponents, e.g.
``3/4*q^2``, ``q^-1``, ``q^(1/2)``, ``(1 - q^2)/(q + 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .algebra import ONE_ELT, AlgebraElement, alg_adjoint, alg_mul, generator
from .scalars import Scalar, ScalarError


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def pretty(self) -> str:
        return f"{self.message} at position {self.pos}\n  {self.text}\n  {' ' * self.pos}^"


# ------------------------------------------------------------------- AST
@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class QPow:
    exp: Fraction  # integer or half-integer


@dataclass(frozen=True)
class Gen:
    name: str  # "a", "a*", "c", "c*"


@dataclass(frozen=True)
class Neg:
    arg: "ExprAst"


@dataclass(frozen=True)
class Sum:
    left: "ExprAst"
    right: "ExprAst"
    sign: int


@dataclass(frozen=True)
class Prod:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Div:
    left: "ExprAst"
    right: "ExprAst"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exp: int


@dataclass(frozen=True)
class Adj:
    arg: "ExprAst"


ExprAst = Union[Num, QPow, Gen, Neg, Sum, Prod, Div, Pow, Adj]


# ----------------------------------------------------------------- lexer
Token = Tuple[str, object, int]  # kind, value, position


def _tokenize(text: str) -> List[Token]:
    toks: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch in "ac":
            j = i + 1
            name = ch
            if j < n and text[j] == "*":
                nxt = text[j + 1] if j + 1 < n else ""
                # "a*" is a star unless something that can be multiplied follows at once
                if not (nxt.isalnum() or nxt == "("):
                    name = ch + "*"
                    j += 1
            toks.append(("gen", name, i))
            i = j
            continue
        if ch == "q":
            toks.append(("q", None, i))
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append((ch, None, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    toks.append(("end", None, n))
    return toks


# ---------------------------------------------------------------- parser
_FACTOR_START = {"num", "gen", "q", "("}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> Token:
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise self.error(f"expected {kind!r}, found {self._describe(tok)}", tok[2])
        self.i += 1
        return tok

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    @staticmethod
    def _describe(tok: Token) -> str:
        return "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else str(tok[1]))

    def parse(self) -> ExprAst:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self._describe(self.peek())}")
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            node = Sum(node, self.term(), sign)
        return node

    def term(self) -> ExprAst:
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            inner = self.term()
            return Neg(inner) if kind == "-" else inner
        node = self.factor()
        while True:
            kind, _, pos = self.peek()
            if kind == "*":
                self.take()
                node = Prod(node, self.signed_factor())
            elif kind == "/":
                self.take()
                node = Div(node, self.signed_factor(), pos)
            elif kind in _FACTOR_START:
                node = Prod(node, self.factor())
            else:
                return node

    def signed_factor(self) -> ExprAst:
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.signed_factor())
        return self.factor()

    def factor(self) -> ExprAst:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            node: ExprAst = Num(Fraction(val))
        elif kind == "gen":
            self.take()
            node = Gen(val)
        elif kind == "q":
            self.take()
            node = QPow(Fraction(1))
            if self.peek()[0] == "^" and self.toks[self.i + 1][0] != "*":
                self.take("^")
                node = QPow(self.q_exponent())
        elif kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
        elif kind == "end":
            raise self.error("unexpected end of input", pos)
        else:
            raise self.error(f"unexpected {self._describe(self.peek())}", pos)
        while self.peek()[0] == "^":
            self.take()
            if self.peek()[0] == "*":
                self.take()
                node = Adj(node)
                continue
            epos = self.peek()[2]
            e = self.nat_exponent()
            if e == 0:
                raise ParseError("exponent 0 is not allowed (write 1 for the identity)", self.text, epos)
            node = Pow(node, e)
        return node

    def nat_exponent(self) -> int:
        if self.peek()[0] == "(":
            self.take()
            e = self.nat_exponent()
            self.take(")")
            return e
        if self.peek()[0] == "-":
            raise self.error("negative exponents exist only for q")
        return self.take("num")[1]

    def signed_int(self) -> int:
        sign = 1
        while self.peek()[0] in ("-", "+"):
            if self.take()[0] == "-":
                sign = -sign
        return sign * self.take("num")[1]

    def q_exponent(self) -> Fraction:
        pos = self.peek()[2]
        if self.peek()[0] == "(":
            self.take()
            num = self.signed_int()
            den = 1
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")[1]
            self.take(")")
            e = Fraction(num, den)
        else:
            e = Fraction(self.signed_int())
        if e == 0:
            raise ParseError("exponent 0 is not allowed (write 1 for the identity)", self.text, pos)
        if (2 * e).denominator != 1:
            raise ParseError("q exponents must be integers or half-integers", self.text, pos)
        return e


def parse_expr(text: str) -> ExprAst:
    return _Parser(text).parse()


# -------------------------------------------------------------- evaluate
def evaluate(node: ExprAst, text: str = "") -> AlgebraElement:
    if isinstance(node, Num):
        return AlgebraElement.scalar(node.value)
    if isinstance(node, QPow):
        return AlgebraElement.scalar(Scalar.upow(int(2 * node.exp)))
    if isinstance(node, Gen):
        return generator(node.name)
    if isinstance(node, Neg):
        return -evaluate(node.arg, text)
    if isinstance(node, Sum):
        left, right = evaluate(node.left, text), evaluate(node.right, text)
        return left + right if node.sign > 0 else left - right
    if isinstance(node, Prod):
        return alg_mul(evaluate(node.left, text), evaluate(node.right, text))
    if isinstance(node, Div):
        den = evaluate(node.right, text)
        if not den.is_scalar():
            raise ParseError("can only divide by a scalar", text, node.pos)
        s = den.scalar_part()
        if s.is_zero():
            raise ParseError("division by zero", text, node.pos)
        try:
            return evaluate(node.left, text).scale(s.inverse())
        except ScalarError as exc:
            raise ParseError(str(exc), text, node.pos) from exc
    if isinstance(node, Pow):
        base = evaluate(node.base, text)
        out = ONE_ELT
        for _ in range(node.exp):
            out = alg_mul(out, base)
        return out
    if isinstance(node, Adj):
        return alg_adjoint(evaluate(node.arg, text))
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str) -> AlgebraElement:
    return evaluate(parse_expr(text), text)
