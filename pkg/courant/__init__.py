"""Generalized Courant pseudoalgebras and the associated construction C(E)."""

from courant.data import (
    GenCourantData,
    SymmetryViolation,
    build_associated_courant,
    default_pair_bounds,
    dorfman_courant_data,
    perturbed_dorfman_courant,
)
from courant.square import (
    SquareElement,
    SymSquare,
    associated_square,
    balanced_square,
    inv_generator,
    symmetric_pair_piece,
)

__all__ = [
    "GenCourantData",
    "SquareElement",
    "SymSquare",
    "SymmetryViolation",
    "associated_square",
    "balanced_square",
    "build_associated_courant",
    "default_pair_bounds",
    "dorfman_courant_data",
    "inv_generator",
    "perturbed_dorfman_courant",
    "symmetric_pair_piece",
]
