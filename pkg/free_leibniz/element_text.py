"""Text grammar for free elements and bracket expressions.

    element ::= term (('+'|'-') term)*
    term    ::= [rat] word
    word    ::= letter (('⊗' | 'ox') letter)*
    letter  ::= '(' [mono ['*']] gen ')'

e.g. ``(e1)⊗(x*e2) - 2/3 (e1)``. Expressions used by the ``expand`` command
extend terms with ``[a, b]`` (bracket), ``{a, b}`` (symmetrized product),
``<f> a`` (A-action) and parentheses.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import pyparsing as pp
from sympy import QQ

from coeff_algebra import ElementSyntaxError, format_monomial, format_rational, parse_poly
from coeff_algebra.poly_text import MINUS, monomial_expr, rational_expr
from free_leibniz.element import FreeElement
from free_leibniz.free_algebra import FreeLeibniz
from free_leibniz.words import Letter, Word, word_sort_key

TENSOR = "⊗"
ASCII_TENSOR = " ox "


def _word_grammar(variables: Tuple[str, ...], generators: Tuple[str, ...]) -> pp.ParserElement:
    index = {g: i for i, g in enumerate(generators)}
    zero = tuple(0 for _ in variables)
    gen = pp.one_of(list(generators), as_keyword=True)
    mono = pp.Opt(monomial_expr(variables) + pp.Opt(pp.Suppress("*")), default=zero)
    letter = pp.Suppress("(") + mono + gen + pp.Suppress(")")
    letter.set_parse_action(lambda t: [Letter(t[0], index[t[1]])])
    sep = pp.Suppress(pp.Literal(TENSOR) | pp.Keyword("ox"))
    word = letter + pp.ZeroOrMore(sep + letter)
    return word.set_parse_action(lambda t: [tuple(t)])


def _signed(term: pp.ParserElement) -> pp.ParserElement:
    first = pp.Opt(MINUS | pp.Literal("+"), default="+") + term
    other = (pp.Literal("+") | MINUS) + term

    def total(t):
        out = None
        for sign, value in zip(t[0::2], t[1::2]):
            value = -value if sign == "-" else value
            out = value if out is None else out + value
        return [out]

    return (first + pp.ZeroOrMore(other)).set_parse_action(total)


@lru_cache(maxsize=None)
def _element_grammar(free: FreeLeibniz) -> pp.ParserElement:
    word = _word_grammar(free.algebra.variables, free.module.generators)
    word.add_parse_action(lambda t: [free.word_element(t[0])])
    term = pp.Opt(rational_expr(), default=QQ.one) + word
    term.set_parse_action(lambda t: [t[1] * t[0]])
    return _signed(term)


@lru_cache(maxsize=None)
def _expression_grammar(free: FreeLeibniz) -> pp.ParserElement:
    expr = pp.Forward()
    word = _word_grammar(free.algebra.variables, free.module.generators)
    word.add_parse_action(lambda t: [free.word_element(t[0])])
    pair = expr + pp.Suppress(",") + expr
    bracket = (pp.Suppress("[") + pair + pp.Suppress("]")).set_parse_action(
        lambda t: [free.bracket(t[0], t[1])]
    )
    sym = (pp.Suppress("{") + pair + pp.Suppress("}")).set_parse_action(
        lambda t: [free.symmetrized(t[0], t[1])]
    )
    atom = pp.Forward()
    action = (pp.Suppress("<") + pp.SkipTo(">") + pp.Suppress(">") + atom).set_parse_action(
        lambda t: [free.module_action(parse_poly(free.algebra, t[0]), t[1])]
    )
    group = pp.Suppress("(") + expr + pp.Suppress(")")
    atom <<= word | bracket | sym | action | group
    term = pp.Opt(rational_expr(), default=QQ.one) + atom
    term.set_parse_action(lambda t: [t[1] * t[0]])
    expr <<= _signed(term)
    return expr


def _parse(grammar: pp.ParserElement, text: str):
    try:
        return grammar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ElementSyntaxError(text, exc.msg, line=exc.lineno, column=exc.col) from exc


def parse_free_element(free: FreeLeibniz, text: str) -> FreeElement:
    return _parse(_element_grammar(free), text)


def evaluate_expression(free: FreeLeibniz, text: str) -> FreeElement:
    """Evaluate a bracket expression to its normal form in F(M)."""
    return _parse(_expression_grammar(free), text)


def format_word(free: FreeLeibniz, word: Word, *, ascii: bool = False) -> str:
    parts = []
    for letter in word:
        mono = format_monomial(free.algebra.variables, letter.mono)
        name = free.module.generators[letter.gen]
        parts.append(f"({mono}*{name})" if mono else f"({name})")
    return (ASCII_TENSOR if ascii else TENSOR).join(parts)


def format_free_element(free: FreeLeibniz, u: FreeElement, *, ascii: bool = False) -> str:
    if not u:
        return "0"
    chunks = []
    for word in sorted(u.labels(), key=word_sort_key):
        c = u.coefficient(word)
        magnitude = -c if c < 0 else c
        body = format_word(free, word, ascii=ascii)
        if magnitude != 1:
            body = f"{format_rational(magnitude)} {body}"
        if not chunks:
            chunks.append(f"-{body}" if c < 0 else body)
        else:
            chunks.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(chunks)
