"""Generalized (pre-)Courant data and the associated construction C(E)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

from linquot import Bounds, SaturationConfig
from pseudoalgebra_core import (
    AnchorModule,
    DorfmanElement,
    DorfmanInstance,
    FiniteInstance,
    PseudoalgebraInstance,
    ValueModule,
)
from courant.square import SymSquare, associated_square, balanced_square

_logger = logging.getLogger(__name__)


class SymmetryViolation(ValueError):
    """The base instance fails S1 or S2, so C(E) is not defined."""

    def __init__(self, instance_name: str, reports: Sequence[Any]) -> None:
        failing = [r.identity for r in reports if not r.verdict]
        super().__init__(f"{instance_name} is not symmetric: failing {failing}")
        self.reports = tuple(reports)


@dataclass(frozen=True)
class GenCourantData:
    """(E1, E2, [-,-], (-|-), a, mu_left, mu_right); the bracket and anchor live on ``instance``."""

    name: str
    instance: PseudoalgebraInstance
    values: ValueModule
    pairing: Callable[[Any, Any], Any]
    balanced: Optional[SymSquare] = None


def default_pair_bounds(instance: PseudoalgebraInstance) -> Bounds:
    """Pairs X.Y keep the base bounds: weight(X) + weight(Y) <= wmax."""
    sb = instance.sample_bounds
    if sb is None:
        return Bounds(wmax=1, pmax=0)
    return Bounds(wmax=sb.wmax, pmax=sb.pmax)


def build_associated_courant(
    instance: FiniteInstance,
    config: SaturationConfig,
    *,
    pair_bounds: Optional[Bounds] = None,
    symmetry_reports: Optional[Sequence[Any]] = None,
) -> GenCourantData:
    """C(E) = (E, R(E), [-,-], (X|Y) = class of X.Y, a, induced actions).

    ``symmetry_reports`` are the S1/S2 reports of the base instance; any
    failing one aborts the construction.
    """
    if symmetry_reports is not None:
        failing = [r for r in symmetry_reports if r.identity in ("S1", "S2") and not r.verdict]
        if failing:
            raise SymmetryViolation(instance.name, failing)
    bounds = pair_bounds or default_pair_bounds(instance)
    balanced = balanced_square(instance, bounds, config)
    reduced = associated_square(balanced, config)
    _logger.info(
        f"associated courant {instance.name}: pair_bounds=({bounds.wmax},{bounds.pmax}) "
        f"balanced={len(balanced.quotient.cobasis)} reduced={len(reduced.quotient.cobasis)}"
    )
    return GenCourantData(f"C({instance.name})", instance, reduced, reduced.tensor, balanced)


def dorfman_courant_data(instance: DorfmanInstance) -> GenCourantData:
    """Dorfman with E2 = A and (mu_left, mu_right) = (a, -a)."""
    return GenCourantData(instance.name, instance, AnchorModule(instance), instance.pairing)


def perturbed_dorfman_courant(instance: DorfmanInstance) -> GenCourantData:
    """Dorfman whose pairing also adds sum_j X_j Y_j of the vector parts.

    Still symmetric and A-bilinear, but the invariance relation between the
    left and right actions fails.
    """

    def pairing(u: DorfmanElement, v: DorfmanElement):
        extra = instance.algebra.zero
        for a, b in zip(u.vec, v.vec):
            extra = extra + a * b
        return instance.pairing(u, v) + extra

    return GenCourantData(f"{instance.name}~", instance, AnchorModule(instance), pairing)
