"""Coefficient algebra A = QQ[x1..xd] and its derivations."""

from coeff_algebra.algebra import (
    AlgebraMismatch,
    ArithOp,
    CoefficientAlgebra,
    Monomial,
    Poly,
    add_monomials,
    format_rational,
    poly_arith,
    to_rational,
)
from coeff_algebra.derivation import Derivation, apply_derivation, commutator
from coeff_algebra.poly_text import ElementSyntaxError, format_monomial, format_poly, parse_poly

__all__ = [
    "AlgebraMismatch",
    "ArithOp",
    "CoefficientAlgebra",
    "Derivation",
    "ElementSyntaxError",
    "Monomial",
    "Poly",
    "add_monomials",
    "apply_derivation",
    "commutator",
    "format_monomial",
    "format_poly",
    "format_rational",
    "parse_poly",
    "poly_arith",
    "to_rational",
]
