"""Reduced row-echelon spans and quotient projections over QQ.

Row reduction is sympy's ``DomainMatrix.rref``; pivots are the first nonzero
column in piece order, so higher-weight labels (earlier columns) become pivots
first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from linquot.combination import Combination
from linquot.piece import FilteredPiece, coerce_vector

_logger = logging.getLogger(__name__)

Vector = Dict[int, Any]


@dataclass(frozen=True)
class Subspace:
    piece: FilteredPiece
    rows: Tuple[Mapping[int, Any], ...]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: Mapping[int, Any] | Sequence[Any]) -> Vector:
        """Residual of ``vector`` with zero entries on every pivot column."""
        vec = coerce_vector(vector, self.piece)
        for pivot, row in zip(self.pivots, self.rows):
            c = vec.get(pivot)
            if not c:
                continue
            for col, value in row.items():
                updated = vec.get(col, QQ.zero) - c * value
                if updated:
                    vec[col] = updated
                else:
                    vec.pop(col, None)
        return vec

    def contains(self, vector: Mapping[int, Any] | Sequence[Any]) -> bool:
        return not self.reduce(vector)

    def pivot_counts_by_weight(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for p in self.pivots:
            w = self.piece.grades[p].weight
            out[w] = out.get(w, 0) + 1
        return out


def empty_subspace(piece: FilteredPiece) -> Subspace:
    return Subspace(piece, (), ())


def echelonize(vectors: Iterable[Mapping[int, Any] | Sequence[Any]], piece: FilteredPiece) -> Subspace:
    """Reduced row-echelon basis of the span of ``vectors``."""
    dod = {}
    for vector in vectors:
        vec = coerce_vector(vector, piece)
        if vec:
            dod[len(dod)] = vec
    if not dod or piece.size == 0:
        return empty_subspace(piece)
    matrix = DomainMatrix.from_dod(dod, (len(dod), piece.size), QQ)
    reduced, pivots = matrix.rref()
    reduced_rows = reduced.to_dod()
    rows = tuple(dict(reduced_rows[i]) for i in range(len(pivots)))
    if _logger.isEnabledFor(logging.DEBUG):
        _logger.debug(f"echelonize: vectors={len(dod):<5} columns={piece.size:<5} rank={len(pivots)}")
    return Subspace(piece, rows, tuple(int(p) for p in pivots))


@dataclass(frozen=True)
class QuotientSpace:
    """piece / relations, with the non-pivot labels as cobasis."""

    piece: FilteredPiece
    relations: Subspace
    cobasis: Tuple[Hashable, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.relations.piece != self.piece:
            raise ValueError("relations live in a different piece")
        pivots = set(self.relations.pivots)
        object.__setattr__(
            self, "cobasis", tuple(label for i, label in enumerate(self.piece.basis) if i not in pivots)
        )

    def project_vector(self, vector: Mapping[int, Any] | Sequence[Any]) -> Vector:
        return self.relations.reduce(vector)

    def project_terms(self, terms: Combination | Mapping[Hashable, Any]) -> Dict[Hashable, Any]:
        """Normal form of a label combination; the result is supported on the cobasis."""
        return self.piece.from_vector(self.relations.reduce(self.piece.to_vector(terms)))

    def dimensions_by_weight(self) -> List[Tuple[int, int, int, int]]:
        """Rows (weight, dim_free, dim_relations, dim_quotient), ascending weight."""
        free = self.piece.count_by_weight()
        rel = self.relations.pivot_counts_by_weight()
        return [(w, free[w], rel.get(w, 0), free[w] - rel.get(w, 0)) for w in sorted(free)]


def project(vector: Mapping[int, Any] | Sequence[Any], quotient: QuotientSpace) -> Vector:
    return quotient.project_vector(vector)
