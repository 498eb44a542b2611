"""(phi1, phi2): C(FS(M)) -> C', with phi2 = (-|-)' o (phi1 . phi1) on R(FS(M))."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Hashable, List, Tuple

from courant import GenCourantData, SquareElement, SymSquare
from axiom_checks import CheckReport, SampleGrid, element_slot, report_from_defects, run_identity, value_slot
from universal_maps.descent import SymmetricDescent

_logger = logging.getLogger(__name__)


class NonVanishingOnInv(ValueError):
    def __init__(self, witness: str, image: str) -> None:
        super().__init__(f"phi2 does not vanish on {witness}: image {image}")
        self.witness = witness
        self.image = image


class PairingExtension:
    """phi2 on any representative in the symmetric square."""

    def __init__(self, phi1: SymmetricDescent, square: SymSquare, target: GenCourantData) -> None:
        self.phi1 = phi1
        self.square = square
        self.target = target
        base = square.instance
        self._images = {label: phi1.table[label] for label in base.basis_labels()}
        self.table: Dict[Hashable, Any] = {
            pair: self.of_pair(pair) for pair in square.quotient.cobasis
        }

    def of_pair(self, pair: Tuple[Hashable, Hashable]) -> Any:
        a, b = pair
        return self.target.pairing(self._images[a], self._images[b])

    def __call__(self, p: SquareElement) -> Any:
        out = self.target.values.zero()
        for pair, c in p.items():
            out = out + self.of_pair(pair) * c
        return out


def inv_defects(phi2: PairingExtension, source: GenCourantData) -> List[Tuple[str, str]]:
    reduced = phi2.square
    fmt = phi2.target.values.format_element
    stages = [reduced.generators]
    if source.balanced is not None:
        stages.insert(0, source.balanced.generators)
    out = []
    for generators in stages:
        for description, value in generators:
            image = phi2(value)
            if image:
                out.append((description, fmt(image)))
    piece = reduced.piece
    for i, row in enumerate(reduced.quotient.relations.rows):
        p = SquareElement(piece.from_vector(row))
        image = phi2(p)
        if image:
            out.append((f"relation row {i}: {reduced.format_element(p)}", fmt(image)))
    return out


@dataclass(frozen=True)
class CourantMorphism:
    phi1: SymmetricDescent
    phi2: PairingExtension
    reports: Tuple[CheckReport, ...]


def courant_morphism(
    phi1: SymmetricDescent, source: GenCourantData, target: GenCourantData, grid: SampleGrid
) -> CourantMorphism:
    """Build phi2 on R(FS(M)) and verify that (phi1, phi2) is a morphism.

    ``source`` is C(FS(M)) built on the same quotient as ``phi1``. Raises
    NonVanishingOnInv when phi2 does not descend.
    """
    square = source.values
    if not isinstance(square, SymSquare) or square.instance is not phi1.quotient:
        raise ValueError("source must be the associated Courant data of the quotient phi1 is defined on")
    if target.instance is not phi1.target:
        raise ValueError("target Courant data must be built on the target of phi1")
    phi2 = PairingExtension(phi1, square, target)
    defects = inv_defects(phi2, source)
    checked = len(square.generators) + square.quotient.relations.rank
    if source.balanced is not None:
        checked += len(source.balanced.generators)
    vanishing = report_from_defects("phi2_inv_vanishing", checked, [((d,), img) for d, img in defects])
    if defects:
        _logger.warning(f"phi2 does not descend: {len(defects)} defects; first={defects[0][0]}")
        raise NonVanishingOnInv(*defects[0])

    FS = phi1.quotient
    E2 = target.instance
    M2 = target.values
    X = element_slot(FS)
    R = value_slot(square)
    fmt = M2.format_element

    def resp_sc_prod(x, y):
        return target.pairing(phi1(x), phi1(y)) - phi2(source.pairing(x, y))

    def resp_act_left(x, p):
        return M2.mu_left(phi1(x), phi2(p)) - phi2(square.mu_left(x, p))

    def resp_act_right(x, p):
        return M2.mu_right(phi1(x), phi2(p)) - phi2(square.mu_right(x, p))

    def right_action_diagram(x, y, z):
        return phi2(square.mu_right(x, square.tensor(y, z))) + target.pairing(
            E2.symmetrized(phi1(y), phi1(z)), phi1(x)
        )

    reports = (
        vanishing,
        run_identity("resp_sc_prod", grid, [X, X], resp_sc_prod, fmt),
        run_identity("resp_act_left", grid, [X, R], resp_act_left, fmt),
        run_identity("resp_act_right", grid, [X, R], resp_act_right, fmt),
        run_identity("right_action_diagram", grid, [X, X, X], right_action_diagram, fmt),
    )
    _logger.info(f"phi2 tabulated on {len(phi2.table)} classes of {square.name}")
    return CourantMorphism(phi1, phi2, reports)
