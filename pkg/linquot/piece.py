"""Finite filtered pieces: an ordered basis of labels with their grades."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterable, Mapping, Sequence, Tuple

from sympy import QQ

from linquot.bounds import Grade, TruncationOverflow
from linquot.combination import Combination, _as_qq


@dataclass(frozen=True)
class FilteredPiece:
    """Basis labels in canonical order; column i of every vector is basis[i]."""

    basis: Tuple[Hashable, ...]
    grades: Tuple[Grade, ...]
    index: Mapping[Hashable, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        basis = tuple(self.basis)
        grades = tuple(Grade(*g) for g in self.grades)
        if len(basis) != len(grades):
            raise ValueError(f"{len(basis)} labels but {len(grades)} grades")
        index = {label: i for i, label in enumerate(basis)}
        if len(index) != len(basis):
            raise ValueError("filtered piece labels must be distinct")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "grades", grades)
        object.__setattr__(self, "index", index)

    @property
    def size(self) -> int:
        return len(self.basis)

    def __contains__(self, label: Hashable) -> bool:
        return label in self.index

    def grade_of(self, label: Hashable) -> Grade:
        return self.grades[self.index[label]]

    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted({g.weight for g in self.grades}))

    def count_by_weight(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for g in self.grades:
            out[g.weight] = out.get(g.weight, 0) + 1
        return out

    def to_vector(self, element: Combination | Mapping[Hashable, Any]) -> Dict[int, Any]:
        """Sparse column vector of a label combination.

        Raises TruncationOverflow when a label lies outside the piece.
        """
        terms = element.terms if isinstance(element, Combination) else element
        vec: Dict[int, Any] = {}
        for label, coeff in terms.items():
            pos = self.index.get(label)
            if pos is None:
                raise TruncationOverflow(None, None, f"label {label!r}")
            q = _as_qq(coeff)
            if q:
                vec[pos] = q
        return vec

    def from_vector(self, vec: Mapping[int, Any] | Sequence[Any]) -> Dict[Hashable, Any]:
        items = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
        return {self.basis[i]: c for i, c in items if c}

    def dense(self, vec: Mapping[int, Any]) -> Tuple[Any, ...]:
        return tuple(vec.get(i, QQ.zero) for i in range(self.size))


def coerce_vector(vector: Mapping[int, Any] | Sequence[Any], piece: FilteredPiece) -> Dict[int, Any]:
    """Accept dense sequences (length must match) or sparse column dicts."""
    if isinstance(vector, Mapping):
        out = {}
        for i, c in vector.items():
            if not 0 <= int(i) < piece.size:
                raise ValueError(f"column {i} outside piece of size {piece.size}")
            q = _as_qq(c)
            if q:
                out[int(i)] = q
        return out
    values = list(vector)
    if len(values) != piece.size:
        raise ValueError(f"vector length {len(values)} does not match piece size {piece.size}")
    return {i: q for i, q in ((i, _as_qq(c)) for i, c in enumerate(values)) if q}


def piece_from_labels(labels: Iterable[Tuple[Hashable, Grade]]) -> FilteredPiece:
    pairs = list(labels)
    return FilteredPiece(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
