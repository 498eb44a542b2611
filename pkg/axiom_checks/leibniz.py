"""Leibniz, symmetric and Loday identity suites.

Every residual is written as (composite side) - (simple side), so a pass means
the residual is literally zero.
"""

from __future__ import annotations

from typing import Any, List, Tuple

from anchored_module import format_derivation
from coeff_algebra import Poly
from pseudoalgebra_core import PseudoalgebraInstance, RightAnchor
from axiom_checks.report import CheckReport, Failure, evaluate, run_identity, summarize
from axiom_checks.sampling import SampleGrid, element_slot, scalar_slot


def check_leibniz(instance: PseudoalgebraInstance, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    E = instance
    X = element_slot(E)
    F = scalar_slot(E)
    fmt = E.format_element

    def jacobi(x, y, z):
        return E.bracket(E.bracket(x, y), z) + E.bracket(y, E.bracket(x, z)) - E.bracket(x, E.bracket(y, z))

    def leibniz_rule(f, x, y):
        a_f = E.anchor(x).apply(f)
        return E.bracket(x, E.scalar_mult(f, y)) - E.scalar_mult(f, E.bracket(x, y)) - E.scalar_mult(a_f, y)

    def anchor_morphism(x, y):
        return E.anchor(E.bracket(x, y)) - E.anchor(x).commutator(E.anchor(y))

    def anchor_linearity(f, x):
        return E.anchor(E.scalar_mult(f, x)) - E.anchor(x).times(f)

    def module_associativity(f, g, x):
        return E.scalar_mult(f, E.scalar_mult(g, x)) - E.scalar_mult(f * g, x)

    def module_additivity(f, g, x):
        return E.scalar_mult(f + g, x) - E.scalar_mult(f, x) - E.scalar_mult(g, x)

    def right_adjoint_kills_symmetrized(x, y, z):
        return E.bracket(E.symmetrized(x, y), z)

    return (
        run_identity("jacobi", grid, [X, X, X], jacobi, fmt),
        run_identity("leibniz_rule", grid, [F, X, X], leibniz_rule, fmt),
        run_identity("anchor_morphism", grid, [X, X], anchor_morphism, format_derivation),
        run_identity("anchor_linearity", grid, [F, X], anchor_linearity, format_derivation),
        run_identity("module_associativity", grid, [F, F, X], module_associativity, fmt),
        run_identity("module_additivity", grid, [F, F, X], module_additivity, fmt),
        run_identity("right_adjoint_kills_symmetrized", grid, [X, X, X], right_adjoint_kills_symmetrized, fmt),
    )


def s1_residual(E: PseudoalgebraInstance, f: Poly, x: Any, y: Any) -> Any:
    return E.symmetrized(x, E.scalar_mult(f, y)) - E.symmetrized(E.scalar_mult(f, x), y)


def s2_residual(E: PseudoalgebraInstance, f: Poly, x: Any, y: Any, z: Any) -> Any:
    return (
        E.bracket(E.scalar_mult(f, x), E.symmetrized(y, z))
        - E.symmetrized(E.bracket(x, y), E.scalar_mult(f, z))
        - E.symmetrized(E.scalar_mult(f, y), E.bracket(x, z))
    )


def s2b_residual(E: PseudoalgebraInstance, f: Poly, x: Any, y: Any, z: Any) -> Any:
    fx = E.scalar_mult(f, x)
    left = E.bracket(fx, y) - E.scalar_mult(f, E.bracket(x, y))
    right = E.bracket(fx, z) - E.scalar_mult(f, E.bracket(x, z))
    return E.symmetrized(left, z) + E.symmetrized(y, right)


def check_symmetric(instance: PseudoalgebraInstance, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    """S1, S2 and their reformulations S1b, S2b.

    When S1 passes, S2 and S2b must agree sample by sample; that agreement is
    reported as its own identity.
    """
    E = instance
    X = element_slot(E)
    F = scalar_slot(E)
    fmt = E.format_element

    s1 = run_identity("S1", grid, [F, X, X], lambda f, x, y: s1_residual(E, f, x, y), fmt)
    slots = [F, X, X, X]
    samples = grid.draw("S2", [slot.pool for slot in slots])
    s2_out = evaluate(samples, lambda f, x, y, z: s2_residual(E, f, x, y, z))
    s2b_out = evaluate(samples, lambda f, x, y, z: s2b_residual(E, f, x, y, z))
    s2 = summarize("S2", samples, s2_out, slots, fmt)
    # S1b restates S1; evaluated with the two arguments swapped.
    s1b = run_identity("S1b", grid, [F, X, X], lambda f, x, y: s1_residual(E, f, y, x), fmt)
    s2b = summarize("S2b", samples, s2b_out, slots, fmt)
    reports: List[CheckReport] = [s1, s2, s1b, s2b]
    if s1.verdict:
        failures = []
        checked = 0
        for a, b in zip(s2_out, s2b_out):
            if a.skipped or b.skipped:
                continue
            checked += 1
            if bool(a.residual) != bool(b.residual):
                witness = tuple(slot.fmt(v) for slot, v in zip(slots, a.args))
                residual = f"S2={fmt(a.residual) if a.residual else '0'}; S2b={fmt(b.residual) if b.residual else '0'}"
                failures.append(Failure(witness, residual))
        reports.append(
            CheckReport("s2_s2b_agreement", checked, len(s2_out) - checked, samples.mode, tuple(failures))
        )
    return tuple(reports)


def check_loday(instance: PseudoalgebraInstance, D: RightAnchor, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    """Right differentiability through a right anchor D f(X, Y), and its symmetry criteria."""
    E = instance
    X = element_slot(E)
    F = scalar_slot(E)
    fmt = E.format_element

    def right_diff(f, x, y):
        a_f = E.anchor(y).apply(f)
        return (
            E.bracket(E.scalar_mult(f, x), y)
            - E.scalar_mult(f, E.bracket(x, y))
            + E.scalar_mult(a_f, x)
            - D(f, x, y)
        )

    def lod_s1(f, x, y):
        return D(f, x, y) - D(f, y, x)

    def lod_s2(f, x, y, z):
        return D(f, x, E.symmetrized(y, z)) - D(f, E.bracket(x, y), z) - D(f, y, E.bracket(x, z))

    return (
        run_identity("right_diff", grid, [F, X, X], right_diff, fmt),
        run_identity("lod_s1", grid, [F, X, X], lod_s1, fmt),
        run_identity("lod_s2", grid, [F, X, X, X], lod_s2, fmt),
    )
