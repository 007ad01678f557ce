"""Minimal infix parser for exact polynomial expressions.

Grammar (whitespace insignificant, no floating literals by design):

    expression := ('+'|'-')? term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := integer | variable ('^' signed-integer)? | '(' expression ')'

Variables come from the caller-supplied subset of {t, u, x, y}.  A leading
sign on the first term is accepted so symmetric polynomials like
-t^-2 + 2 - t^2 can be written directly.
"""

from __future__ import annotations

from .errors import ParseError, UnknownVariable
from .laurent import BiLaurentPoly, LaurentPoly

ALLOWED_VARIABLES = ("t", "u", "x", "y")

_OPS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise ParseError("floating literals are not allowed", j)
            out.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            out.append(("NAME", ch, i))
            i += 1
            continue
        if ch in _OPS:
            out.append(("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(("END", "", n))
    return out


class _Parser:
    """Recursive descent over the token list, accumulating exponent maps."""

    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _const(self, value: int) -> dict:
        zero = (0,) * len(self.variables)
        return {zero: value} if value else {}

    def expression(self) -> dict:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "OP" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = _scale(self.term(), sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val in "+-":
                self.take()
                rhs = self.term()
                acc = _add(acc, _scale(rhs, -1 if val == "-" else 1))
            else:
                return acc

    def term(self) -> dict:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val == "*":
                self.take()
                acc = _mul(acc, self.factor(), len(self.variables))
            else:
                return acc

    def factor(self) -> dict:
        kind, val, pos = self.take()
        if kind == "INT":
            return self._const(int(val))
        if kind == "NAME":
            if val not in self.variables:
                if val in ALLOWED_VARIABLES:
                    raise UnknownVariable(
                        f"variable {val!r} not allowed here (expected one of "
                        f"{', '.join(self.variables)})", pos)
                raise UnknownVariable(f"unknown variable {val!r}", pos)
            exp = 1
            kind2, val2, _ = self.peek()
            if kind2 == "OP" and val2 == "^":
                self.take()
                exp = self._signed_integer()
            mono = tuple(exp if v == val else 0 for v in self.variables)
            return {mono: 1}
        if kind == "OP" and val == "(":
            inner = self.expression()
            kind2, val2, pos2 = self.take()
            if not (kind2 == "OP" and val2 == ")"):
                raise ParseError("expected ')'", pos2)
            return inner
        raise ParseError("expected a factor", pos)

    def _signed_integer(self) -> int:
        kind, val, pos = self.take()
        sign = 1
        if kind == "OP" and val in "+-":
            sign = -1 if val == "-" else 1
            kind, val, pos = self.take()
        if kind != "INT":
            raise ParseError("expected an integer exponent", pos)
        return sign * int(val)


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _scale(a: dict, k: int) -> dict:
    return {e: k * c for e, c in a.items()} if k != 1 else a


def _mul(a: dict, b: dict, arity: int) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def parse(text: str, variables=("t",)) -> LaurentPoly | BiLaurentPoly:
    """Parse an expression over the given variables (1 or 2 of t, u, x, y).

    One variable yields a LaurentPoly, two a BiLaurentPoly keyed in the
    given order.  Raises ParseError (with a 0-based position) on malformed
    input and UnknownVariable on a name outside the set.
    """
    variables = tuple(variables)
    if not 1 <= len(variables) <= 2:
        raise ValueError("parse supports one or two variables")
    for v in variables:
        if v not in ALLOWED_VARIABLES:
            raise ValueError(f"variable {v!r} not in {ALLOWED_VARIABLES}")
    parser = _Parser(_tokenize(text), variables)
    coeffs = parser.expression()
    kind, _, pos = parser.peek()
    if kind != "END":
        raise ParseError("trailing input after expression", pos)
    if len(variables) == 1:
        return LaurentPoly({e[0]: c for e, c in coeffs.items()})
    return BiLaurentPoly({e: c for e, c in coeffs.items()})


def parse_univariate(text: str, variable: str = "t") -> LaurentPoly:
    return parse(text, (variable,))


def parse_bivariate(text: str, variables=("x", "y")) -> BiLaurentPoly:
    return parse(text, variables)
