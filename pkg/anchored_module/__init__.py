"""Free anchored modules (M, a) and anchored module maps."""

from anchored_module.maps import (
    AnchorCheck,
    AnchorCheckReport,
    AnchoredMap,
    AnchorIncompatibility,
    format_derivation,
    require_anchored,
    validate_anchored_map,
)
from anchored_module.module import AnchoredModule, ModuleElement, anchor_of

__all__ = [
    "AnchorCheck",
    "AnchorCheckReport",
    "AnchorIncompatibility",
    "AnchoredMap",
    "AnchoredModule",
    "ModuleElement",
    "anchor_of",
    "format_derivation",
    "require_anchored",
    "validate_anchored_map",
]
