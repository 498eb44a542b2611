"""phi1: FS(M) -> E, the descent of F(phi) through J1 + J2.

phi1 is tabulated once on the quotient cobasis; evaluating it on a class is
then a finite linear combination of stored target elements.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Hashable, List, Tuple

from anchored_module import format_derivation
from free_leibniz import FreeElement, FreeLeibnizInstance, format_free_element
from sym_leibniz import SymLeibnizQuotient
from axiom_checks import CheckReport, SampleGrid, element_slot, report_from_defects, run_identity, scalar_slot
from universal_maps.extension import FreeExtension

_logger = logging.getLogger(__name__)


class NonVanishingOnIdeal(ValueError):
    def __init__(self, witness: str, image: str) -> None:
        super().__init__(f"F(phi) does not vanish on {witness}: image {image}")
        self.witness = witness
        self.image = image


class SymmetricDescent:
    def __init__(self, ext: FreeExtension, quotient: SymLeibnizQuotient, table: Dict[Hashable, Any]) -> None:
        self.ext = ext
        self.quotient = quotient
        self.target = ext.target
        self.table = table

    def __call__(self, u: FreeElement) -> Any:
        out = self.target.zero()
        for label, c in self.quotient.coordinates(u).items():
            out = out + self.table[label] * c
        return out


def ideal_defects(ext: FreeExtension, quotient: SymLeibnizQuotient) -> List[Tuple[str, str]]:
    """Relation generators and saturated relation rows with a nonzero image under F(phi)."""
    free = quotient.free
    fmt = ext.target.format_element
    out = []
    for gen, value in quotient.generators:
        image = ext(value)
        if image:
            out.append((gen.describe(free), fmt(image)))
    for i, row in enumerate(quotient.relation_rows()):
        image = ext(row)
        if image:
            out.append((f"relation row {i}: {format_free_element(free, row)}", fmt(image)))
    return out


def descend_to_symmetric(ext: FreeExtension, quotient: SymLeibnizQuotient) -> SymmetricDescent:
    defects = ideal_defects(ext, quotient)
    if defects:
        witness, image = defects[0]
        _logger.warning(f"descent failed: {len(defects)} relations with nonzero image; first={witness}")
        raise NonVanishingOnIdeal(witness, image)
    table = {label: ext.of_word(label) for label in quotient.relations.cobasis}
    _logger.info(f"phi1 tabulated on {len(table)} cobasis labels")
    return SymmetricDescent(ext, quotient, table)


def verify_descent(phi1: SymmetricDescent, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    ext = phi1.ext
    quotient = phi1.quotient
    target = phi1.target
    free = quotient.free
    fmt = target.format_element
    X = element_slot(quotient)
    F = scalar_slot(quotient)

    generator_defects = []
    for i, image in enumerate(ext.phi.images):
        residual = phi1(free.word_element(free.letter(i))) - image
        if residual:
            generator_defects.append(((free.module.generators[i],), fmt(residual)))

    def well_defined(u):
        return ext(u) - phi1(quotient.project(u))

    def bracket(u, v):
        return phi1(quotient.bracket(u, v)) - target.bracket(phi1(u), phi1(v))

    def linear(f, u):
        return phi1(quotient.scalar_mult(f, u)) - target.scalar_mult(f, phi1(u))

    def anchor(u):
        return target.anchor(phi1(u)) - quotient.anchor(u)

    words = element_slot(FreeLeibnizInstance(free))
    return (
        report_from_defects("phi1_on_generators", len(ext.phi.images), generator_defects),
        run_identity("phi1_well_defined", grid, [words], well_defined, fmt),
        run_identity("phi1_bracket", grid, [X, X], bracket, fmt),
        run_identity("phi1_linear", grid, [F, X], linear, fmt),
        run_identity("phi1_anchor", grid, [X], anchor, format_derivation),
    )
