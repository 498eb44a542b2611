"""Leibniz algebras over QQ given by structure constants (zero anchor).

[e_i, e_j] = sum_k c[i][j][k] e_k. Nothing is assumed about the table; the
Jacobi identity is checked, not enforced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Mapping, Sequence, Tuple

from sympy import QQ

from coeff_algebra import CoefficientAlgebra, Derivation, format_rational, to_rational
from linquot import Combination, Grade, ZERO_GRADE, accumulate
from pseudoalgebra_core.instance import FiniteInstance

GROUND = CoefficientAlgebra(())


@dataclass(frozen=True)
class StructureConstants:
    dim: int
    table: Tuple[Tuple[Tuple[Any, ...], ...], ...]
    names: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = int(self.dim)
        if n < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        rows = tuple(tuple(tuple(to_rational(c) for c in vec) for vec in row) for row in self.table)
        if len(rows) != n or any(len(row) != n or any(len(vec) != n for vec in row) for row in rows):
            raise ValueError(f"structure constant table must have shape {n}x{n}x{n}")
        names = tuple(self.names) or tuple(f"e{i + 1}" for i in range(n))
        if len(names) != n or len(set(names)) != n:
            raise ValueError(f"need {n} distinct basis names, got {names}")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "StructureConstants":
        missing = [k for k in ("dim", "table") if k not in raw]
        if missing:
            raise ValueError(f"structure constants missing keys: {missing}")
        return cls(dim=int(raw["dim"]), table=raw["table"], names=tuple(raw.get("names", ())))

    @classmethod
    def abelian(cls, n: int) -> "StructureConstants":
        return cls(n, tuple(tuple(tuple(0 for _ in range(n)) for _ in range(n)) for _ in range(n)))


class StructureConstantInstance(FiniteInstance):
    """Elements are Combinations over basis indices 0..n-1."""

    def __init__(self, constants: StructureConstants, *, name: str = "sc") -> None:
        self.constants = constants
        self.algebra = GROUND
        self.name = name

    def zero(self) -> Combination:
        return Combination({})

    def basis_labels(self) -> Tuple[int, ...]:
        return tuple(range(self.constants.dim))

    def label_element(self, label: Hashable) -> Combination:
        return Combination.of(label)

    def coordinates(self, u: Combination) -> Mapping[Hashable, Any]:
        return u.terms

    def label_grade(self, label: Hashable) -> Grade:
        return ZERO_GRADE

    def element(self, coords: Sequence[Any]) -> Combination:
        if len(coords) != self.constants.dim:
            raise ValueError(f"expected {self.constants.dim} coordinates, got {len(coords)}")
        return Combination({i: c for i, c in enumerate(coords)})

    def bracket(self, u: Combination, v: Combination) -> Combination:
        out: dict = {}
        table = self.constants.table
        for i, a in u.items():
            for j, b in v.items():
                for k, c in enumerate(table[i][j]):
                    if c:
                        accumulate(out, k, a * b * c)
        return Combination(out)

    def scalar_mult(self, f: Any, u: Combination) -> Combination:
        f = self.algebra.require(f)
        return u * f.get(self.algebra.ring.zero_monom, QQ.zero)

    def anchor(self, u: Combination) -> Derivation:
        return Derivation.zero(self.algebra)

    def grade(self, u: Combination) -> Grade:
        return ZERO_GRADE

    def format_element(self, u: Combination) -> str:
        if not u:
            return "0"
        chunks = []
        for i in sorted(u.labels()):
            c = u.coefficient(i)
            magnitude = -c if c < 0 else c
            body = self.constants.names[i] if magnitude == 1 else f"[{format_rational(magnitude)}] {self.constants.names[i]}"
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(chunks)


def sc_bracket(instance: StructureConstantInstance, u: Combination, v: Combination) -> Combination:
    return instance.bracket(u, v)
