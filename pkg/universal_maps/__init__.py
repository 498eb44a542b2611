"""Universal properties: F(phi), its descent phi1 to FS(M), and the Courant morphism (phi1, phi2)."""

from universal_maps.courant_morphism import (
    CourantMorphism,
    NonVanishingOnInv,
    PairingExtension,
    courant_morphism,
    inv_defects,
)
from universal_maps.descent import (
    NonVanishingOnIdeal,
    SymmetricDescent,
    descend_to_symmetric,
    ideal_defects,
    verify_descent,
)
from universal_maps.extension import FreeExtension, extend_to_free, verify_free_extension
from universal_maps.morphism import ExtendedMorphism, build_extended_morphism

__all__ = [
    "CourantMorphism",
    "ExtendedMorphism",
    "FreeExtension",
    "NonVanishingOnIdeal",
    "NonVanishingOnInv",
    "PairingExtension",
    "SymmetricDescent",
    "build_extended_morphism",
    "courant_morphism",
    "descend_to_symmetric",
    "extend_to_free",
    "ideal_defects",
    "inv_defects",
    "verify_descent",
    "verify_free_extension",
]
