"""Free anchored A-modules of finite rank."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence, Tuple

from coeff_algebra import AlgebraMismatch, CoefficientAlgebra, Derivation, Poly, format_poly, parse_poly


@dataclass(frozen=True)
class AnchoredModule:
    """Free module on ``generators`` with anchor row i = a(e_i)."""

    algebra: CoefficientAlgebra
    generators: Tuple[str, ...]
    anchors: Tuple[Derivation, ...]

    def __post_init__(self) -> None:
        gens = tuple(str(g) for g in self.generators)
        if not gens:
            raise ValueError("an anchored module needs at least one generator")
        if len(set(gens)) != len(gens):
            raise ValueError(f"generator names must be distinct, got {gens}")
        clash = sorted(set(gens) & set(self.algebra.variables))
        if clash:
            raise ValueError(f"generator names collide with variables: {clash}")
        for g in gens:
            if not g.isidentifier():
                raise ValueError(f"invalid generator name {g!r}")
        if len(self.anchors) != len(gens):
            raise ValueError(f"anchor has {len(self.anchors)} rows for {len(gens)} generators")
        for row in self.anchors:
            if row.algebra != self.algebra:
                raise AlgebraMismatch("anchor row over a different coefficient algebra")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "anchors", tuple(self.anchors))

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "AnchoredModule":
        missing = [k for k in ("vars", "generators", "anchor") if k not in raw]
        if missing:
            raise ValueError(f"module missing keys: {missing}")
        algebra = CoefficientAlgebra(tuple(raw["vars"] or ()))
        gens = tuple(raw["generators"])
        rows = raw["anchor"]
        if not isinstance(rows, Sequence) or len(rows) != len(gens):
            raise ValueError(f"module.anchor must have {len(gens)} rows (one per generator)")
        anchors = []
        for i, row in enumerate(rows):
            row = list(row or [])
            if len(row) != algebra.nvars:
                raise ValueError(
                    f"module.anchor[{i}] must have {algebra.nvars} entries (one per variable), got {len(row)}"
                )
            anchors.append(Derivation(algebra, tuple(parse_poly(algebra, str(c)) for c in row)))
        return cls(algebra, gens, tuple(anchors))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def generator_index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}; known: {list(self.generators)}") from None

    def element(self, coords: Sequence[Any]) -> "ModuleElement":
        return ModuleElement(self, tuple(self.algebra.require(c) for c in coords))

    def generator(self, i: int, coeff: Any = 1) -> "ModuleElement":
        coords = [self.algebra.zero] * self.rank
        coords[i] = self.algebra.require(coeff)
        return ModuleElement(self, tuple(coords))

    def anchor_of(self, m: "ModuleElement") -> Derivation:
        if m.module != self:
            raise AlgebraMismatch("module element belongs to a different anchored module")
        out = Derivation.zero(self.algebra)
        for c, row in zip(m.coords, self.anchors):
            if c:
                out = out + row.times(c)
        return out

    def has_zero_anchor(self) -> bool:
        return not any(self.anchors)


@dataclass(frozen=True)
class ModuleElement:
    module: AnchoredModule
    coords: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.module.rank:
            raise AlgebraMismatch(f"expected {self.module.rank} coordinates, got {len(self.coords)}")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.module, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.module, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def times(self, f: Any) -> "ModuleElement":
        f = self.module.algebra.require(f)
        return ModuleElement(self.module, tuple(f * c for c in self.coords))

    def format(self) -> str:
        algebra = self.module.algebra
        parts = [
            f"({format_poly(algebra, c)})*{name}"
            for c, name in zip(self.coords, self.module.generators)
            if c
        ]
        return " + ".join(parts) if parts else "0"


def anchor_of(m: ModuleElement) -> Derivation:
    return m.module.anchor_of(m)
