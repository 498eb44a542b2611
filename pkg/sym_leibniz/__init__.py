"""The free symmetric Leibniz pseudoalgebra FS(M) = F(M) / (J1 + J2)."""

from sym_leibniz.ideal import (
    RelationGenerator,
    ideal_closure,
    ideal_family,
    j1_generator,
    j2_generator,
    relation_generators,
)
from sym_leibniz.quotient import SymLeibnizQuotient, build_quotient

__all__ = [
    "RelationGenerator",
    "SymLeibnizQuotient",
    "build_quotient",
    "ideal_closure",
    "ideal_family",
    "j1_generator",
    "j2_generator",
    "relation_generators",
]
