"""Bimodule axioms for a value module (mu_left, mu_right) over an instance."""

from __future__ import annotations

from typing import Tuple

from pseudoalgebra_core import PseudoalgebraInstance, ValueModule
from axiom_checks.report import CheckReport, run_identity
from axiom_checks.sampling import SampleGrid, element_slot, scalar_slot, value_slot


def check_module(values: ValueModule, instance: PseudoalgebraInstance, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    E = instance
    M = values
    X = element_slot(E)
    F = scalar_slot(E)
    W = value_slot(M)
    fmt = M.format_element

    def vvw(x, y, w):
        return M.mu_right(E.bracket(x, y), w) - M.mu_right(y, M.mu_right(x, w)) - M.mu_left(x, M.mu_right(y, w))

    def wvv(x, y, w):
        return M.mu_right(E.bracket(x, y), w) - M.mu_left(x, M.mu_right(y, w)) + M.mu_right(y, M.mu_left(x, w))

    def vwv(x, y, w):
        return M.mu_left(E.bracket(x, y), w) - M.mu_left(x, M.mu_left(y, w)) + M.mu_left(y, M.mu_left(x, w))

    def leib_rule(f, x, w):
        a_f = E.anchor(x).apply(f)
        return M.mu_left(x, M.scalar_mult(f, w)) - M.scalar_mult(f, M.mu_left(x, w)) - M.scalar_mult(a_f, w)

    return (
        run_identity("vvw", grid, [X, X, W], vvw, fmt),
        run_identity("wvv", grid, [X, X, W], wvv, fmt),
        run_identity("vwv", grid, [X, X, W], vwv, fmt),
        run_identity("leib_rule", grid, [F, X, W], leib_rule, fmt),
    )
