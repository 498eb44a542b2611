"""FS(M) = F(M) / (J1 + J2) on a truncated piece.

Elements are FreeElements in normal form, i.e. supported on the quotient
cobasis. Structure maps are evaluated on these representatives and the result
is projected again.
"""

from __future__ import annotations

import logging
from typing import Any, Hashable, List, Mapping, Optional, Tuple

from coeff_algebra import Derivation, Poly
from linquot import Bounds, Grade, QuotientSpace, SaturationConfig, SaturationResult, saturate
from pseudoalgebra_core import FiniteInstance
from free_leibniz import FreeElement, FreeLeibniz, format_free_element, word_grade
from sym_leibniz.ideal import RelationGenerator, ideal_closure, ideal_family

_logger = logging.getLogger(__name__)


class SymLeibnizQuotient(FiniteInstance):
    def __init__(
        self,
        free: FreeLeibniz,
        relations: QuotientSpace,
        saturation: SaturationResult,
        generators: Tuple[Tuple[RelationGenerator, FreeElement], ...],
        *,
        name: str = "FS",
    ) -> None:
        self.free = free
        self.algebra = free.algebra
        self.bounds = free.bounds
        self.relations = relations
        self.saturation = saturation
        self.generators = generators
        self.name = name

    # -- projection ------------------------------------------------------------

    def project(self, u: FreeElement) -> FreeElement:
        """Normal form of the class of ``u``."""
        self.free.require_bounds(u)
        return self.free.element(self.relations.project_terms(u))

    def is_zero_class(self, u: FreeElement) -> bool:
        return not self.project(u)

    def relation_rows(self) -> Tuple[FreeElement, ...]:
        piece = self.relations.piece
        return tuple(self.free.element(piece.from_vector(row)) for row in self.relations.relations.rows)

    def dimensions_by_weight(self) -> List[Tuple[int, int, int, int]]:
        return self.relations.dimensions_by_weight()

    def anchor_defects(self) -> List[Tuple[str, Derivation]]:
        """Relation generators and saturated rows with a nonzero induced anchor."""
        out = []
        for gen, value in self.generators:
            D = self.free.induced_anchor(value)
            if D:
                out.append((gen.describe(self.free), D))
        for i, row in enumerate(self.relation_rows()):
            D = self.free.induced_anchor(row)
            if D:
                out.append((f"row {i}: {format_free_element(self.free, row)}", D))
        return out

    # -- instance interface ----------------------------------------------------

    def zero(self) -> FreeElement:
        return self.free.zero()

    def bracket(self, u: FreeElement, v: FreeElement) -> FreeElement:
        return self.project(self.free.bracket(u, v))

    def scalar_mult(self, f: Poly, u: FreeElement) -> FreeElement:
        return self.project(self.free.module_action(f, u))

    def anchor(self, u: FreeElement) -> Derivation:
        return self.free.induced_anchor(u)

    def grade(self, u: FreeElement) -> Grade:
        return u.grade

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return self.bounds

    def basis_labels(self) -> Tuple[Hashable, ...]:
        return self.relations.cobasis

    def label_element(self, label: Hashable) -> FreeElement:
        return self.free.word_element(label)

    def coordinates(self, u: FreeElement) -> Mapping[Hashable, Any]:
        return self.project(u).terms

    def label_grade(self, label: Hashable) -> Grade:
        return word_grade(label)

    def format_element(self, u: FreeElement) -> str:
        return format_free_element(self.free, u)


def build_quotient(free: FreeLeibniz, config: SaturationConfig, *, name: str = "FS") -> SymLeibnizQuotient:
    kept: List[Tuple[RelationGenerator, FreeElement]] = []
    result = saturate(
        free.piece,
        ideal_family(free, config, kept),
        config,
        closure=ideal_closure(free, config),
        context="J1+J2",
    )
    relations = QuotientSpace(free.piece, result.subspace)
    nonzero = tuple((gen, value) for gen, value in kept if value)
    _logger.info(
        f"quotient built: free={free.piece.size} relations={result.subspace.rank} "
        f"cobasis={len(relations.cobasis)} generators={len(kept)} nonzero={len(nonzero)}"
    )
    return SymLeibnizQuotient(free, relations, result, nonzero, name=name)
