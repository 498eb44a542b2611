"""Uniform interface for Leibniz pseudoalgebra instances.

An instance exposes its element arithmetic through the element objects
themselves (``+``, ``-``, rational ``*``, truthiness for zero) and the
structure maps through the methods below. Instances with a finite label
basis additionally implement :class:`FiniteInstance`; the symmetric square
construction needs that.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Hashable, Mapping, Optional, Sequence, Tuple

from coeff_algebra import CoefficientAlgebra, Derivation, Poly
from linquot import Bounds, Grade


class MissingCapability(NotImplementedError):
    """The instance does not provide a pairing, D or anchor."""


class PseudoalgebraInstance(ABC):
    name: str
    algebra: CoefficientAlgebra

    has_pairing: bool = False

    @abstractmethod
    def zero(self) -> Any:
        raise NotImplementedError

    @abstractmethod
    def bracket(self, u: Any, v: Any) -> Any:
        raise NotImplementedError

    @abstractmethod
    def scalar_mult(self, f: Poly, u: Any) -> Any:
        raise NotImplementedError

    @abstractmethod
    def anchor(self, u: Any) -> Derivation:
        raise NotImplementedError

    @abstractmethod
    def format_element(self, u: Any) -> str:
        raise NotImplementedError

    @abstractmethod
    def grade(self, u: Any) -> Grade:
        raise NotImplementedError

    @abstractmethod
    def sample_elements(self) -> Sequence[Any]:
        """Basis elements used by the sample grids."""
        raise NotImplementedError

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        """Bound on the summed grade of a sample tuple; None means unbounded."""
        return None

    def symmetrized(self, u: Any, v: Any) -> Any:
        return self.bracket(u, v) + self.bracket(v, u)

    def sample_scalars(self) -> Tuple[Poly, ...]:
        bounds = self.sample_bounds
        top = bounds.pmax if bounds is not None else 1
        return tuple(self.algebra.evaluate_monomial(m) for m in self.algebra.monomials(top))

    def scalar_grade(self, f: Poly) -> Grade:
        return Grade(0, self.algebra.degree(f))

    def pairing(self, u: Any, v: Any) -> Any:
        raise MissingCapability(f"{self.name} has no scalar product")

    def D(self, f: Poly) -> Any:
        raise MissingCapability(f"{self.name} has no D operator")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class FiniteInstance(PseudoalgebraInstance):
    """An instance whose elements are combinations over a finite ordered label basis."""

    @abstractmethod
    def basis_labels(self) -> Tuple[Hashable, ...]:
        raise NotImplementedError

    @abstractmethod
    def label_element(self, label: Hashable) -> Any:
        raise NotImplementedError

    @abstractmethod
    def coordinates(self, u: Any) -> Mapping[Hashable, Any]:
        raise NotImplementedError

    @abstractmethod
    def label_grade(self, label: Hashable) -> Grade:
        raise NotImplementedError

    def format_label(self, label: Hashable) -> str:
        return self.format_element(self.label_element(label))

    def sample_elements(self) -> Sequence[Any]:
        return tuple(self.label_element(label) for label in self.basis_labels())
