"""Derivations of A in coefficient form, D = sum_j coeffs[j] d/dx_j."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Tuple

from coeff_algebra.algebra import AlgebraMismatch, CoefficientAlgebra, Poly, to_rational


@dataclass(frozen=True)
class Derivation:
    algebra: CoefficientAlgebra
    coeffs: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.algebra.require(c) for c in self.coeffs)
        if len(coeffs) != self.algebra.nvars:
            raise AlgebraMismatch(
                f"derivation needs {self.algebra.nvars} components, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, algebra: CoefficientAlgebra) -> "Derivation":
        return cls(algebra, tuple(algebra.zero for _ in range(algebra.nvars)))

    @classmethod
    def partial(cls, algebra: CoefficientAlgebra, j: int) -> "Derivation":
        return cls(algebra, tuple(algebra.one if k == j else algebra.zero for k in range(algebra.nvars)))

    @classmethod
    def from_components(cls, algebra: CoefficientAlgebra, components: Iterable[Any]) -> "Derivation":
        return cls(algebra, tuple(algebra.require(c) for c in components))

    def _check(self, other: "Derivation") -> None:
        if other.algebra != self.algebra:
            raise AlgebraMismatch("derivations over different coefficient algebras")

    def apply(self, f: Any) -> Poly:
        f = self.algebra.require(f)
        out = self.algebra.zero
        for c, x in zip(self.coeffs, self.algebra.gens):
            if c:
                out += c * f.diff(x)
        return out

    def __add__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Derivation":
        return Derivation(self.algebra, tuple(-a for a in self.coeffs))

    def scale(self, c: Any) -> "Derivation":
        q = to_rational(c)
        return Derivation(self.algebra, tuple(a * q for a in self.coeffs))

    def times(self, f: Any) -> "Derivation":
        """The A-module action f*D."""
        f = self.algebra.require(f)
        return Derivation(self.algebra, tuple(f * a for a in self.coeffs))

    def commutator(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(
            self.algebra,
            tuple(self.apply(b) - other.apply(a) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __bool__(self) -> bool:
        return any(self.coeffs)


def apply_derivation(D: Derivation, f: Any) -> Poly:
    return D.apply(f)


def commutator(D1: Derivation, D2: Derivation) -> Derivation:
    return D1.commutator(D2)
