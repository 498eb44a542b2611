"""The whole factorization phi -> F(phi) -> phi1 -> (phi1, phi2) in one call."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from anchored_module import AnchoredMap
from courant import GenCourantData
from sym_leibniz import SymLeibnizQuotient
from axiom_checks import CheckReport, SampleGrid
from universal_maps.courant_morphism import PairingExtension, courant_morphism
from universal_maps.descent import SymmetricDescent, descend_to_symmetric, verify_descent
from universal_maps.extension import FreeExtension, extend_to_free, verify_free_extension

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtendedMorphism:
    phi: AnchoredMap
    free_extension: FreeExtension
    phi1: SymmetricDescent
    phi2: PairingExtension
    reports: Tuple[CheckReport, ...]

    @property
    def verdict(self) -> bool:
        return all(r.verdict for r in self.reports)


def build_extended_morphism(
    phi: AnchoredMap,
    quotient: SymLeibnizQuotient,
    source: GenCourantData,
    target: GenCourantData,
    *,
    limit: int,
    seed: int,
) -> ExtendedMorphism:
    """Raises AnchorIncompatibility, NonVanishingOnIdeal or NonVanishingOnInv when a step fails."""
    ext = extend_to_free(phi, quotient.free)
    phi1 = descend_to_symmetric(ext, quotient)
    base_grid = SampleGrid(quotient.bounds, limit=limit, seed=seed)
    pair_grid = SampleGrid(source.values.sample_bounds, limit=limit, seed=seed)
    reports = verify_free_extension(ext, base_grid) + verify_descent(phi1, base_grid)
    morphism = courant_morphism(phi1, source, target, pair_grid)
    reports = reports + morphism.reports
    result = ExtendedMorphism(phi, ext, phi1, morphism.phi2, reports)
    _logger.info(f"universal morphism into {target.name}: verdict={'PASS' if result.verdict else 'FAIL'}")
    return result
