"""Recursive-descent parser for phase-space symbol expressions.

Grammar (standard precedence: ^ binds tighter than unary minus, which binds
tighter than * and /, which bind tighter than binary + and -; * / and + -
associate to the left):

    expr    := term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := "-" factor | power
    power   := atom ("^" integer)?
    atom    := NUMBER | "i" | "x" | "p" | "hbar" | "g"
             | "(" expr ")" | "exp" "(" expr ")"

NUMBER is a non-negative integer literal; rationals are written with the
division operator ("3/4").  A divisor must reduce to a single monomial (a
product of literals and variable powers).  Arguments of exp(...) must reduce
to quadratic forms r*p^2 + s*p*x + t*x^2 with Laurent-hbar coefficients.
"""

from __future__ import annotations

from .errors import NegativeXPower, NonQuadraticExponent, ParseError
from .rationals import GaussianRational, HbarScalar
from .symbols import ExpQuadratic, PhaseSymbol

_VARIABLES = {
    "x": PhaseSymbol.monomial(1, x=1),
    "p": PhaseSymbol.monomial(1, p=1),
    "hbar": PhaseSymbol.monomial(1, hbar=1),
    "g": PhaseSymbol.monomial(1, g=1),
    "i": PhaseSymbol.monomial(GaussianRational(0, 1)),
}

_PUNCT = set("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    size = len(text)
    while pos < size:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < size and text[pos].isdigit():
                pos += 1
            tokens.append(("number", text[start:pos], start))
            continue
        if ch.isalpha():
            start = pos
            while pos < size and text[pos].isalpha():
                pos += 1
            tokens.append(("name", text[start:pos], start))
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", "", size))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.advance()

    def parse(self) -> PhaseSymbol:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return value

    def expr(self) -> PhaseSymbol:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op[0] == "+" else value - rhs
        return value

    def term(self) -> PhaseSymbol:
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()
            rhs = self.factor()
            if op[0] == "*":
                value = value * rhs
            else:
                value = self._divide(value, rhs, op[2])
        return value

    def _divide(self, num: PhaseSymbol, den: PhaseSymbol, offset: int) -> PhaseSymbol:
        parts = den.parts
        single = (len(parts) == 1
                  and next(iter(parts)).is_trivial
                  and len(next(iter(parts.values()))) == 1)
        if not single:
            raise ParseError(
                "divisor must be a product of literals and variable powers", offset)
        try:
            return num * den ** -1
        except ValueError:
            raise NegativeXPower(
                "division would produce a negative power of x or g", offset) from None

    def factor(self) -> PhaseSymbol:
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> PhaseSymbol:
        base_offset = self.peek()[2]
        value = self.atom()
        if self.peek()[0] != "^":
            return value
        self.advance()
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        tok = self.expect("number")
        exponent = -int(tok[1]) if negate else int(tok[1])
        try:
            return value ** exponent
        except ValueError:
            raise NegativeXPower(
                "negative power of x or g is not representable", base_offset) from None

    def atom(self) -> PhaseSymbol:
        tok = self.peek()
        kind, text, offset = tok
        if kind == "number":
            self.advance()
            return PhaseSymbol.monomial(int(text))
        if kind == "name":
            self.advance()
            if text == "exp":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return PhaseSymbol.exponential(_to_quadratic(inner, offset))
            sym = _VARIABLES.get(text)
            if sym is None:
                raise ParseError(f"unknown name {text!r}", offset)
            return sym
        if kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"expected a value, found {text or 'end of input'!r}", offset)


def _to_quadratic(sym: PhaseSymbol, offset: int) -> ExpQuadratic:
    r: list[tuple[int, GaussianRational]] = []
    s: list[tuple[int, GaussianRational]] = []
    t: list[tuple[int, GaussianRational]] = []
    for eq, (xd, pd, hd, gd), coeff in sym.iter_terms():
        if not eq.is_trivial or gd != 0:
            raise NonQuadraticExponent(
                "exp argument must be a quadratic form in p and x", offset)
        if (xd, pd) == (0, 2):
            r.append((hd, coeff))
        elif (xd, pd) == (1, 1):
            s.append((hd, coeff))
        elif (xd, pd) == (2, 0):
            t.append((hd, coeff))
        else:
            raise NonQuadraticExponent(
                "exp argument must be a quadratic form in p and x", offset)
    return ExpQuadratic(HbarScalar(r), HbarScalar(s), HbarScalar(t))


def parse_expression(text: str) -> PhaseSymbol:
    """Parse expression text into a canonical PhaseSymbol."""
    return _Parser(text).parse()


def parse_hbar_scalar(text: str) -> HbarScalar:
    """Parse a Laurent scalar in hbar (no x, p or g dependence allowed)."""
    sym = parse_expression(text)
    terms = []
    for eq, (xd, pd, hd, gd), coeff in sym.iter_terms():
        if not eq.is_trivial or xd or pd or gd:
            raise ParseError("expected a scalar in hbar only", 0)
        terms.append((hd, coeff))
    return HbarScalar(terms)
