"""Right-anchor evaluators D f(X, Y) for the Loday checks."""

from __future__ import annotations

from typing import Any, Callable

from coeff_algebra import Poly
from pseudoalgebra_core.dorfman import DorfmanInstance, interior_product
from pseudoalgebra_core.instance import PseudoalgebraInstance

RightAnchor = Callable[[Poly, Any, Any], Any]


def pairing_right_anchor(instance: PseudoalgebraInstance) -> RightAnchor:
    """D f(X, Y) = (X|Y) * D f for instances carrying a pairing and D."""

    def evaluate(f: Poly, X: Any, Y: Any) -> Any:
        return instance.scalar_mult(instance.pairing(X, Y), instance.D(f))

    return evaluate


def zero_right_anchor(instance: PseudoalgebraInstance) -> RightAnchor:
    def evaluate(f: Poly, X: Any, Y: Any) -> Any:
        return instance.zero()

    return evaluate


def unsymmetrized_right_anchor(instance: DorfmanInstance) -> RightAnchor:
    """Keeps only the eta(X) half of the pairing; not symmetric in X, Y."""

    def evaluate(f: Poly, X: Any, Y: Any) -> Any:
        weight = interior_product(X.vec, Y.form) * (instance.pairing_scale * 2)
        return instance.scalar_mult(weight, instance.D(f))

    return evaluate
