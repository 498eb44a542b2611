"""Truncation bounds (W_max, P_max) and the grade of basis labels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, NamedTuple, Optional


class Grade(NamedTuple):
    weight: int
    pdeg: int

    def plus(self, other: "Grade") -> "Grade":
        return Grade(self.weight + other.weight, self.pdeg + other.pdeg)


ZERO_GRADE = Grade(0, 0)


def total_grade(grades: Iterable[Grade]) -> Grade:
    w = p = 0
    for g in grades:
        w += g.weight
        p += g.pdeg
    return Grade(w, p)


class TruncationOverflow(ArithmeticError):
    """A result would leave the truncated piece."""

    def __init__(self, grade: Optional[Grade], bounds: Optional["Bounds"], context: str = "") -> None:
        where = f" in {context}" if context else ""
        limit = f"(wmax={bounds.wmax}, pmax={bounds.pmax})" if bounds is not None else "the piece"
        what = f"weight={grade.weight} pdeg={grade.pdeg}" if grade is not None else "result"
        super().__init__(f"{what} exceeds {limit}{where}")
        self.grade = grade
        self.bounds = bounds


class BoundsMismatch(ValueError):
    """Elements truncated at different bounds were combined."""


@dataclass(frozen=True)
class Bounds:
    wmax: int
    pmax: int

    def __post_init__(self) -> None:
        if int(self.wmax) < 1:
            raise ValueError(f"wmax must be >= 1, got {self.wmax}")
        if int(self.pmax) < 0:
            raise ValueError(f"pmax must be >= 0, got {self.pmax}")
        object.__setattr__(self, "wmax", int(self.wmax))
        object.__setattr__(self, "pmax", int(self.pmax))

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "Bounds":
        missing = [k for k in ("wmax", "pmax") if k not in raw]
        if missing:
            raise ValueError(f"bounds missing keys: {missing}")
        return cls(wmax=int(raw["wmax"]), pmax=int(raw["pmax"]))

    def fits(self, grade: Grade) -> bool:
        return grade.weight <= self.wmax and grade.pdeg <= self.pmax

    def check(self, grade: Grade, context: str = "") -> None:
        if not self.fits(grade):
            raise TruncationOverflow(grade, self, context)
