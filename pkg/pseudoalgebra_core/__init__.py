"""Pseudoalgebra instance interface and the concrete structure-constant and Dorfman families."""

from pseudoalgebra_core.dorfman import (
    DorfmanElement,
    DorfmanInstance,
    dorfman_D,
    dorfman_bracket,
    dorfman_pairing,
    exterior_derivative,
    interior_product,
    lie_derivative,
)
from pseudoalgebra_core.element_text import parse_dorfman_element, parse_sc_element
from pseudoalgebra_core.instance import FiniteInstance, MissingCapability, PseudoalgebraInstance
from pseudoalgebra_core.right_anchor import (
    RightAnchor,
    pairing_right_anchor,
    unsymmetrized_right_anchor,
    zero_right_anchor,
)
from pseudoalgebra_core.structure_constants import (
    GROUND,
    StructureConstantInstance,
    StructureConstants,
    sc_bracket,
)
from pseudoalgebra_core.value_modules import AdjointModule, AnchorModule, ValueModule

__all__ = [
    "AdjointModule",
    "AnchorModule",
    "DorfmanElement",
    "DorfmanInstance",
    "FiniteInstance",
    "GROUND",
    "MissingCapability",
    "PseudoalgebraInstance",
    "RightAnchor",
    "StructureConstantInstance",
    "StructureConstants",
    "ValueModule",
    "dorfman_D",
    "dorfman_bracket",
    "dorfman_pairing",
    "exterior_derivative",
    "interior_product",
    "lie_derivative",
    "pairing_right_anchor",
    "parse_dorfman_element",
    "parse_sc_element",
    "sc_bracket",
    "unsymmetrized_right_anchor",
    "zero_right_anchor",
]
