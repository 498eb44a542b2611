"""Courant pseudoalgebra identities, generalized pre-Courant relations and the
symmetric-square lemmas behind the associated construction."""

from __future__ import annotations

from typing import TYPE_CHECKING, Tuple

from coeff_algebra import format_poly
from pseudoalgebra_core import PseudoalgebraInstance
from axiom_checks.report import CheckReport, run_identity
from axiom_checks.sampling import SampleGrid, element_slot, scalar_slot

if TYPE_CHECKING:
    from courant import GenCourantData, SymSquare


def check_courant(instance: PseudoalgebraInstance, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    """Axioms of a Courant pseudoalgebra with A-valued pairing and derivation D."""
    E = instance
    X = element_slot(E)
    F = scalar_slot(E)
    fmt = E.format_element
    P = E.pairing

    def fmt_poly(p) -> str:
        return format_poly(E.algebra, p)

    def a(x, p):
        return E.anchor(x).apply(p)

    def courant_axiom(x, y):
        return P(E.bracket(x, y), y) - P(x, E.bracket(y, y))

    def eq4(x, y):
        return a(x, P(y, y)) - P(x, E.bracket(y, y)) * 2

    def eq5(x, y):
        return a(x, P(y, y)) - P(E.bracket(x, y), y) * 2

    def eq4a(x, y, z):
        return a(x, P(y, z)) - P(x, E.symmetrized(y, z))

    def inv1(x, y, z):
        return a(x, P(y, z)) - P(E.bracket(x, y), z) - P(y, E.bracket(x, z))

    def inv2(x, y, z):
        return a(x, P(y, z)) - P(x, E.bracket(y, z) + E.bracket(z, y))

    def inv3(x, y, z):
        return P(E.bracket(x, y), z) + P(y, E.bracket(x, z)) - P(x, E.bracket(y, z) + E.bracket(z, y))

    def zr(f, x, y):
        return E.bracket(x, E.scalar_mult(f, y)) - E.scalar_mult(f, E.bracket(x, y)) - E.scalar_mult(a(x, f), y)

    def d_def(f, x):
        return P(E.D(f), x) - a(x, f)

    def eq4c(y, z):
        return E.D(P(y, z)) - E.symmetrized(y, z)

    def diff_cond_first(f, x, y):
        return (
            E.bracket(E.scalar_mult(f, x), y)
            - E.scalar_mult(f, E.bracket(x, y))
            + E.scalar_mult(a(y, f), x)
            - E.scalar_mult(P(x, y), E.D(f))
        )

    return (
        run_identity("courant_axiom", grid, [X, X], courant_axiom, fmt_poly),
        run_identity("eq4", grid, [X, X], eq4, fmt_poly),
        run_identity("eq5", grid, [X, X], eq5, fmt_poly),
        run_identity("eq4a", grid, [X, X, X], eq4a, fmt_poly),
        run_identity("inv1", grid, [X, X, X], inv1, fmt_poly),
        run_identity("inv2", grid, [X, X, X], inv2, fmt_poly),
        run_identity("inv3", grid, [X, X, X], inv3, fmt_poly),
        run_identity("zr", grid, [F, X, X], zr, fmt),
        run_identity("D_def", grid, [F, X], d_def, fmt_poly),
        run_identity("eq4c", grid, [X, X], eq4c, fmt),
        run_identity("diff_cond_first", grid, [F, X, X], diff_cond_first, fmt),
    )


def check_generalized_courant(data: "GenCourantData", grid: SampleGrid) -> Tuple[CheckReport, ...]:
    """Invariance relations plus symmetry and A-bilinearity of the E2-valued pairing."""
    E = data.instance
    M = data.values
    P = data.pairing
    X = element_slot(E)
    F = scalar_slot(E)
    fmt = M.format_element

    def left_act(x, y, z):
        return M.mu_left(x, P(y, z)) - P(E.bracket(x, y), z) - P(y, E.bracket(x, z))

    def right_act(x, y, z):
        return M.mu_right(x, P(y, z)) + P(E.symmetrized(y, z), x)

    def equal(x, y, z):
        return P(E.bracket(x, y), z) + P(y, E.bracket(x, z)) - P(E.symmetrized(y, z), x)

    def pairing_symmetry(x, y):
        return P(x, y) - P(y, x)

    def pairing_bilinearity(f, x, y):
        return P(E.scalar_mult(f, x), y) - M.scalar_mult(f, P(x, y))

    return (
        run_identity("left_act", grid, [X, X, X], left_act, fmt),
        run_identity("right_act", grid, [X, X, X], right_act, fmt),
        run_identity("equal", grid, [X, X, X], equal, fmt),
        run_identity("pairing_symmetry", grid, [X, X], pairing_symmetry, fmt),
        run_identity("pairing_bilinearity", grid, [F, X, X], pairing_bilinearity, fmt),
    )


def check_square_lemmas(square: "SymSquare", grid: SampleGrid) -> Tuple[CheckReport, ...]:
    """Identities on the balanced square used to show that the actions descend to R(E).

    inv_covariance      mu_left(W) I(X,Y,Z) = I([W,X],Y,Z) + I(X,[W,Y],Z) + I(X,Y,[W,Z])
    right_kills_inv     mu_right(W)(f I(X,Y,Z)) = 0
    right_balancing     mu_right(W)((fY).Z) = mu_right(W)(Y.(fZ))
    """
    E = square.instance
    X = element_slot(E)
    F = scalar_slot(E)
    fmt = square.format_element
    I = square.raw_inv  # noqa: E741

    def inv_covariance(w, x, y, z):
        left = square.mu_left(w, I(x, y, z))
        right = I(E.bracket(w, x), y, z) + I(x, E.bracket(w, y), z) + I(x, y, E.bracket(w, z))
        return left - square.project(right)

    def right_kills_inv(f, w, x, y, z):
        return square.mu_right(w, square.raw_scalar_mult(f, I(x, y, z)))

    def right_balancing(f, w, y, z):
        return square.mu_right(w, square.raw_tensor(E.scalar_mult(f, y), z)) - square.mu_right(
            w, square.raw_tensor(y, E.scalar_mult(f, z))
        )

    return (
        run_identity("inv_covariance", grid, [X, X, X, X], inv_covariance, fmt),
        run_identity("right_kills_inv", grid, [F, X, X, X, X], right_kills_inv, fmt),
        run_identity("right_balancing", grid, [F, X, X, X], right_balancing, fmt),
    )
