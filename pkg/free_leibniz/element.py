"""Elements of the truncated free Leibniz pseudoalgebra."""

from __future__ import annotations

from dataclasses import dataclass

from linquot import Bounds, BoundsMismatch, Combination, Grade
from free_leibniz.words import word_grade


@dataclass(frozen=True, eq=False)
class FreeElement(Combination):
    """Rational combination of words; every word respects ``bounds``."""

    bounds: Bounds

    def __post_init__(self) -> None:
        super().__post_init__()
        for word in self.terms:
            self.bounds.check(word_grade(word), "free element")

    def _check_compatible(self, other: Combination) -> None:
        super()._check_compatible(other)
        if other.bounds != self.bounds:
            raise BoundsMismatch(f"elements truncated at {self.bounds} and {other.bounds} cannot be combined")

    @property
    def grade(self) -> Grade:
        """(max weight, max pdeg) over the support; (0, 0) for zero."""
        grades = [word_grade(w) for w in self.terms]
        return Grade(max((g.weight for g in grades), default=0), max((g.pdeg for g in grades), default=0))
