"""F(M) seen through the uniform instance interface."""

from __future__ import annotations

from typing import Any, Hashable, Mapping, Optional, Tuple

from coeff_algebra import Derivation, Poly
from linquot import Bounds, Grade
from pseudoalgebra_core import FiniteInstance
from free_leibniz.element import FreeElement
from free_leibniz.element_text import format_free_element
from free_leibniz.free_algebra import FreeLeibniz
from free_leibniz.words import word_grade


class FreeLeibnizInstance(FiniteInstance):
    def __init__(self, free: FreeLeibniz, *, name: str = "free") -> None:
        self.free = free
        self.algebra = free.algebra
        self.name = name

    def zero(self) -> FreeElement:
        return self.free.zero()

    def bracket(self, u: FreeElement, v: FreeElement) -> FreeElement:
        return self.free.bracket(u, v)

    def scalar_mult(self, f: Poly, u: FreeElement) -> FreeElement:
        return self.free.module_action(f, u)

    def anchor(self, u: FreeElement) -> Derivation:
        return self.free.induced_anchor(u)

    def grade(self, u: FreeElement) -> Grade:
        return u.grade

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return self.free.bounds

    def basis_labels(self) -> Tuple[Hashable, ...]:
        return self.free.word_basis

    def label_element(self, label: Hashable) -> FreeElement:
        return self.free.word_element(label)

    def coordinates(self, u: FreeElement) -> Mapping[Hashable, Any]:
        return u.terms

    def label_grade(self, label: Hashable) -> Grade:
        return word_grade(label)

    def format_element(self, u: FreeElement) -> str:
        return format_free_element(self.free, u)
