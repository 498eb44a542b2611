"""Anchored module maps phi: M -> E into a pseudoalgebra instance."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Tuple

from coeff_algebra import AlgebraMismatch, Derivation, format_poly
from anchored_module.module import AnchoredModule
from pseudoalgebra_core import PseudoalgebraInstance

_logger = logging.getLogger(__name__)


class AnchorIncompatibility(ValueError):
    def __init__(self, report: "AnchorCheckReport") -> None:
        bad = [e.generator for e in report.entries if not e.ok]
        super().__init__(f"anchor of the image differs from the source anchor for generators {bad}")
        self.report = report


def format_derivation(D: Derivation) -> str:
    parts = []
    for name, c in zip(D.algebra.variables, D.coeffs):
        if not c:
            continue
        parts.append(f"∂{name}" if c == D.algebra.one else f"[{format_poly(D.algebra, c)}] ∂{name}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class AnchorCheck:
    generator: str
    expected: Derivation
    actual: Derivation

    @property
    def ok(self) -> bool:
        return self.actual == self.expected


@dataclass(frozen=True)
class AnchorCheckReport:
    entries: Tuple[AnchorCheck, ...]

    @property
    def verdict(self) -> bool:
        return all(e.ok for e in self.entries)

    def lines(self) -> Tuple[str, ...]:
        out = []
        for e in self.entries:
            out.append(
                f"anchor {e.generator:<8} expected={format_derivation(e.expected):<20} "
                f"actual={format_derivation(e.actual):<20} "
                f"{'PASS' if e.ok else 'FAIL'}"
            )
        return tuple(out)


@dataclass(frozen=True)
class AnchoredMap:
    source: AnchoredModule
    target: PseudoalgebraInstance
    images: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.rank:
            raise ValueError(f"need {self.source.rank} images, got {len(self.images)}")
        if self.target.algebra != self.source.algebra:
            raise AlgebraMismatch(
                f"source is over QQ{list(self.source.algebra.variables)}, "
                f"target over QQ{list(self.target.algebra.variables)}"
            )
        object.__setattr__(self, "images", tuple(self.images))

    def image_of_generator(self, i: int, coeff: Any = 1) -> Any:
        """phi(coeff * e_i) = coeff * phi(e_i), computed in the target."""
        return self.target.scalar_mult(self.source.algebra.require(coeff), self.images[i])


def validate_anchored_map(phi: AnchoredMap) -> AnchorCheckReport:
    entries = []
    for name, expected, image in zip(phi.source.generators, phi.source.anchors, phi.images):
        entries.append(AnchorCheck(name, expected, phi.target.anchor(image)))
    report = AnchorCheckReport(tuple(entries))
    _logger.info(f"anchored map into {phi.target.name}: verdict={'PASS' if report.verdict else 'FAIL'}")
    return report


def require_anchored(phi: AnchoredMap) -> AnchorCheckReport:
    report = validate_anchored_map(phi)
    if not report.verdict:
        raise AnchorIncompatibility(report)
    return report
