"""The coefficient algebra A = QQ[x1..xd].

Polynomials are sympy sparse ring elements (``PolyElement``) over ``QQ`` with
graded-lex term order. A ring with zero variables is the ground field itself;
structure-constant instances use it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Tuple

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

Poly = PolyElement
Monomial = Tuple[int, ...]


class AlgebraMismatch(ValueError):
    """Raised when polynomials or derivations from different algebras meet."""


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    SCALE = "scale"


def to_rational(value: Any):
    """Convert ints, fractions, mpq and ``"a/b"`` strings to a QQ element."""
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return QQ(int(num), int(den))
        return QQ(int(text))
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(value) -> str:
    q = to_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class CoefficientAlgebra:
    """QQ[variables] with exact arithmetic; equal variable tuples share one ring."""

    variables: Tuple[str, ...]
    ring: PolyRing = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        variables = tuple(str(v) for v in self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not v.isidentifier():
                raise ValueError(f"invalid variable name {v!r}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "ring", PolyRing(",".join(variables) if variables else "", QQ, grlex))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def zero(self) -> Poly:
        return self.ring.zero

    @property
    def one(self) -> Poly:
        return self.ring.one

    @property
    def gens(self) -> Tuple[Poly, ...]:
        return self.ring.gens

    def constant(self, value: Any) -> Poly:
        return self.ring.ground_new(to_rational(value))

    def monomial(self, exponents: Iterable[int], coeff: Any = 1) -> Poly:
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise AlgebraMismatch(f"exponent vector {exps} does not fit {self.nvars} variables")
        return self.ring.term_new(exps, to_rational(coeff))

    def monomials(self, max_degree: int, *, min_degree: int = 0) -> Tuple[Monomial, ...]:
        """Exponent vectors with min_degree <= total degree <= max_degree.

        Ordered by degree, then reverse-lex within a degree (x^2 before x*y before y^2).
        """
        out = []
        for deg in range(max(min_degree, 0), max_degree + 1):
            block = [
                mono
                for mono in itertools.product(range(deg + 1), repeat=self.nvars)
                if sum(mono) == deg
            ]
            block.sort(reverse=True)
            out.extend(tuple(m) for m in block)
        return tuple(out)

    def require(self, p: Any) -> Poly:
        """Coerce ints/rationals to constants; reject polynomials of another ring."""
        if isinstance(p, PolyElement):
            if p.ring != self.ring:
                raise AlgebraMismatch(f"polynomial over {p.ring.symbols} used in QQ{list(self.variables)}")
            return p
        return self.constant(p)

    def degree(self, p: Poly) -> int:
        """Total degree; the zero polynomial has degree 0."""
        p = self.require(p)
        return max((sum(m) for m in p.keys()), default=0)

    def is_constant(self, p: Poly) -> bool:
        return all(sum(m) == 0 for m in self.require(p).keys())

    def evaluate_monomial(self, mono: Monomial) -> Poly:
        return self.ring.term_new(tuple(mono), QQ.one)


def poly_arith(algebra: CoefficientAlgebra, p: Poly, q: Any, op: ArithOp) -> Poly:
    """Exact add/sub/mul of two polynomials, or scaling by a rational."""
    p = algebra.require(p)
    if op is ArithOp.SCALE:
        return p * to_rational(q)
    q = algebra.require(q)
    if op is ArithOp.ADD:
        return p + q
    if op is ArithOp.SUB:
        return p - q
    if op is ArithOp.MUL:
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def add_monomials(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))
