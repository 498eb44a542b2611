"""Text grammar for polynomials.

    poly    ::= term (('+'|'-') term)*
    term    ::= rat ['*' varpow ('*' varpow)*] | varpow ('*' varpow)*
    varpow  ::= var ['^' int]
    rat     ::= int ['/' int]

Example: ``3/2*x^2*y - x + 1``. Whitespace is insignificant; the unicode minus
sign is accepted wherever '-' is.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import pyparsing as pp
from sympy import QQ

from coeff_algebra.algebra import CoefficientAlgebra, Monomial, Poly, format_rational


class ElementSyntaxError(ValueError):
    """Text that does not match one of the element grammars."""

    def __init__(self, text: str, message: str, *, line: int = 1, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message} in {text!r}")
        self.text = text
        self.line = line
        self.column = column


MINUS = pp.Literal("-") | pp.Literal("−").set_parse_action(pp.replace_with("-"))


def rational_expr() -> pp.ParserElement:
    integer = pp.Word(pp.nums)
    rat = integer + pp.Opt(pp.Suppress("/") + integer)
    return rat.set_parse_action(lambda t: QQ(int(t[0]), int(t[1]) if len(t) > 1 else 1))


def monomial_expr(variables: Tuple[str, ...]) -> pp.ParserElement:
    """Parses ``x^2*y`` into an exponent vector."""
    if not variables:
        return pp.NoMatch()
    index = {v: i for i, v in enumerate(variables)}
    var = pp.one_of(list(variables), as_keyword=True)
    varpow = var + pp.Opt(pp.Suppress("^") + pp.Word(pp.nums), default="1")
    varpow.set_parse_action(lambda t: [(index[t[0]], int(t[1]))])

    def to_exponents(tokens) -> Monomial:
        exps = [0] * len(variables)
        for i, e in tokens:
            exps[i] += e
        return tuple(exps)

    mono = varpow + pp.ZeroOrMore(pp.Suppress("*") + varpow)
    return mono.set_parse_action(lambda t: [to_exponents(t)])


@lru_cache(maxsize=None)
def _poly_grammar(variables: Tuple[str, ...]) -> pp.ParserElement:
    algebra = CoefficientAlgebra(variables)
    mono = monomial_expr(variables)
    rat = rational_expr()

    def make_term(t) -> Poly:
        coeff = QQ.one
        exps = tuple(0 for _ in variables)
        for tok in t:
            if isinstance(tok, tuple):
                exps = tok
            else:
                coeff = tok
        return [algebra.monomial(exps, coeff)]

    term = (rat + pp.Opt(pp.Suppress("*") + mono)) | mono
    term.set_parse_action(make_term)
    signed_first = pp.Opt(MINUS | pp.Literal("+"), default="+") + term
    signed_other = (pp.Literal("+") | MINUS) + term

    def total(t) -> Poly:
        out = algebra.zero
        for sign, value in zip(t[0::2], t[1::2]):
            out = out - value if sign == "-" else out + value
        return [out]

    return (signed_first + pp.ZeroOrMore(signed_other)).set_parse_action(total)


def parse_poly(algebra: CoefficientAlgebra, text: str) -> Poly:
    text = str(text)
    try:
        return _poly_grammar(algebra.variables).parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ElementSyntaxError(text, exc.msg, line=exc.lineno, column=exc.col) from exc


def format_monomial(variables: Tuple[str, ...], mono: Monomial) -> str:
    parts = []
    for name, e in zip(variables, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(algebra: CoefficientAlgebra, p: Poly) -> str:
    p = algebra.require(p)
    if not p:
        return "0"
    chunks = []
    for mono, coeff in p.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono_text = format_monomial(algebra.variables, mono)
        if not mono_text:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = mono_text
        else:
            body = f"{format_rational(magnitude)}*{mono_text}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f" - {body}" if negative else f" + {body}")
    return "".join(chunks)
