"""Modules over a Leibniz pseudoalgebra: a value space with left/right actions.

``AnchorModule`` is (A, a, -a); ``AdjointModule`` is (E, ad, -ad), the
(nabla, -nabla) structure of the adjoint representation.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Optional, Sequence

from coeff_algebra import CoefficientAlgebra, Poly, format_poly
from linquot import Bounds, Grade
from pseudoalgebra_core.instance import PseudoalgebraInstance


class ValueModule(ABC):
    name: str
    algebra: CoefficientAlgebra

    @abstractmethod
    def zero(self) -> Any:
        raise NotImplementedError

    @abstractmethod
    def mu_left(self, x: Any, w: Any) -> Any:
        raise NotImplementedError

    @abstractmethod
    def mu_right(self, x: Any, w: Any) -> Any:
        raise NotImplementedError

    @abstractmethod
    def scalar_mult(self, f: Poly, w: Any) -> Any:
        raise NotImplementedError

    @abstractmethod
    def format_element(self, w: Any) -> str:
        raise NotImplementedError

    @abstractmethod
    def grade(self, w: Any) -> Grade:
        raise NotImplementedError

    @abstractmethod
    def sample_elements(self) -> Sequence[Any]:
        raise NotImplementedError

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return None


class AnchorModule(ValueModule):
    """A acted on through the anchor: mu_left(X) = a(X), mu_right(X) = -a(X)."""

    def __init__(self, instance: PseudoalgebraInstance, *, sample_degree: int = 1) -> None:
        self.instance = instance
        self.algebra = instance.algebra
        self.name = f"A[{instance.name}]"
        self.sample_degree = sample_degree

    def zero(self) -> Poly:
        return self.algebra.zero

    def mu_left(self, x: Any, w: Poly) -> Poly:
        return self.instance.anchor(x).apply(w)

    def mu_right(self, x: Any, w: Poly) -> Poly:
        return -self.instance.anchor(x).apply(w)

    def scalar_mult(self, f: Poly, w: Poly) -> Poly:
        return self.algebra.require(f) * self.algebra.require(w)

    def format_element(self, w: Poly) -> str:
        return format_poly(self.algebra, w)

    def grade(self, w: Poly) -> Grade:
        return Grade(0, self.algebra.degree(w))

    def sample_elements(self) -> Sequence[Poly]:
        return tuple(self.algebra.evaluate_monomial(m) for m in self.algebra.monomials(self.sample_degree))

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return self.instance.sample_bounds


class AdjointModule(ValueModule):
    """E acting on itself: mu_left(X) = [X, -], mu_right(X) = -[X, -]."""

    def __init__(self, instance: PseudoalgebraInstance) -> None:
        self.instance = instance
        self.algebra = instance.algebra
        self.name = f"ad[{instance.name}]"

    def zero(self) -> Any:
        return self.instance.zero()

    def mu_left(self, x: Any, w: Any) -> Any:
        return self.instance.bracket(x, w)

    def mu_right(self, x: Any, w: Any) -> Any:
        return -self.instance.bracket(x, w)

    def scalar_mult(self, f: Poly, w: Any) -> Any:
        return self.instance.scalar_mult(f, w)

    def format_element(self, w: Any) -> str:
        return self.instance.format_element(w)

    def grade(self, w: Any) -> Grade:
        return self.instance.grade(w)

    def sample_elements(self) -> Sequence[Any]:
        return self.instance.sample_elements()

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return self.instance.sample_bounds
