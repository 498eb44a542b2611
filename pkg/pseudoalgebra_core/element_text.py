"""Text grammars for structure-constant and Dorfman elements.

    sc_element      ::= ['-'] sc_term (('+'|'-') sc_term)*
    sc_term         ::= ['[' rat ']'] name
    dorfman_element ::= ['-'] d_term (('+'|'-') d_term)* | '0'
    d_term          ::= ['[' poly ']'] ('∂'var | 'D'var | 'd'var)

Examples: ``e1 - [1/2] e2``, ``∂x + [x] dx``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import pyparsing as pp

from coeff_algebra import ElementSyntaxError, parse_poly
from coeff_algebra.poly_text import MINUS, rational_expr
from linquot import Combination
from pseudoalgebra_core.dorfman import DorfmanElement, DorfmanInstance
from pseudoalgebra_core.structure_constants import StructureConstantInstance


def _signed_sum(term: pp.ParserElement) -> pp.ParserElement:
    first = pp.Opt(MINUS | pp.Literal("+"), default="+") + term
    other = (pp.Literal("+") | MINUS) + term
    return first + pp.ZeroOrMore(other)


@lru_cache(maxsize=None)
def _sc_grammar(names: Tuple[str, ...]) -> pp.ParserElement:
    index = {n: i for i, n in enumerate(names)}
    coeff = pp.Suppress("[") + rational_expr() + pp.Suppress("]")
    name = pp.one_of(list(names), as_keyword=True).set_parse_action(lambda t: [index[t[0]]])
    term = pp.Group(pp.Opt(coeff, default=1) + name)
    return _signed_sum(term)


def parse_sc_element(instance: StructureConstantInstance, text: str) -> Combination:
    try:
        tokens = _sc_grammar(instance.constants.names).parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ElementSyntaxError(text, exc.msg, line=exc.lineno, column=exc.col) from exc
    out = instance.zero()
    for sign, (coeff, label) in zip(tokens[0::2], tokens[1::2]):
        term = Combination.of(label, coeff)
        out = out - term if sign == "-" else out + term
    return out


@lru_cache(maxsize=None)
def _dorfman_grammar(variables: Tuple[str, ...]) -> pp.ParserElement:
    kinds = {}
    for j, v in enumerate(variables):
        kinds[f"∂{v}"] = ("vec", j)
        kinds[f"D{v}"] = ("vec", j)
        kinds[f"d{v}"] = ("form", j)
    coeff = pp.Suppress("[") + pp.SkipTo("]") + pp.Suppress("]")
    basis = pp.MatchFirst([pp.Keyword(k) for k in sorted(kinds, key=len, reverse=True)])
    basis.set_parse_action(lambda t: [kinds[t[0]]])
    term = pp.Group(pp.Opt(coeff, default="1") + basis)
    return pp.Literal("0") | _signed_sum(term)


def parse_dorfman_element(instance: DorfmanInstance, text: str) -> DorfmanElement:
    algebra = instance.algebra
    try:
        tokens = _dorfman_grammar(algebra.variables).parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ElementSyntaxError(text, exc.msg, line=exc.lineno, column=exc.col) from exc
    out = instance.zero()
    if list(tokens) == ["0"]:
        return out
    for sign, (coeff_text, (kind, j)) in zip(tokens[0::2], tokens[1::2]):
        coeff = parse_poly(algebra, coeff_text)
        term = instance.vector_field(j, coeff) if kind == "vec" else instance.one_form(j, coeff)
        out = out - term if sign == "-" else out + term
    return out
