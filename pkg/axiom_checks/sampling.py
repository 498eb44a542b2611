"""Deterministic sample grids.

A grid draws tuples from a list of pools (one pool per argument slot) and
keeps only the tuples whose summed grade fits the bounds. If the surviving
grid has at most ``limit`` tuples it is used whole, otherwise a seeded
uniform subsample of ``limit`` tuples is taken, in grid order.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, List, NamedTuple, Optional, Sequence, Tuple

from coeff_algebra import format_poly
from linquot import ZERO_GRADE, Bounds, Grade
from pseudoalgebra_core import PseudoalgebraInstance, ValueModule

_logger = logging.getLogger(__name__)

DEFAULT_SAMPLE_LIMIT = 10_000

Pool = Sequence[Tuple[Any, Grade]]


class Slot(NamedTuple):
    pool: Pool
    fmt: Callable[[Any], str]


@dataclass(frozen=True)
class Samples:
    mode: str
    total: int
    tuples: Tuple[Tuple[Any, ...], ...]


class SampleGrid:
    def __init__(self, bounds: Optional[Bounds], *, limit: int = DEFAULT_SAMPLE_LIMIT, seed: int = 0) -> None:
        if limit < 1:
            raise ValueError(f"sample limit must be positive, got {limit}")
        self.bounds = bounds
        self.limit = limit
        self.seed = seed

    @classmethod
    def for_instance(
        cls, instance: PseudoalgebraInstance, *, limit: int = DEFAULT_SAMPLE_LIMIT, seed: int = 0
    ) -> "SampleGrid":
        return cls(instance.sample_bounds, limit=limit, seed=seed)

    def _fits(self, grade: Grade) -> bool:
        return self.bounds is None or self.bounds.fits(grade)

    def _enumerate(self, pools: Sequence[Pool]) -> List[Tuple[Any, ...]]:
        out: List[Tuple[Any, ...]] = []

        def extend(depth: int, prefix: Tuple[Any, ...], grade: Grade) -> None:
            if depth == len(pools):
                out.append(prefix)
                return
            for value, g in pools[depth]:
                total = grade.plus(g)
                if self._fits(total):
                    extend(depth + 1, prefix + (value,), total)

        extend(0, (), ZERO_GRADE)
        return out

    def draw(self, identity: str, pools: Sequence[Pool]) -> Samples:
        grid = self._enumerate(pools)
        if len(grid) <= self.limit:
            return Samples("exhaustive", len(grid), tuple(grid))
        # String seeds hash deterministically, so each identity gets its own stream.
        rng = random.Random(f"{self.seed}:{identity}")
        picked = sorted(rng.sample(range(len(grid)), self.limit))
        if _logger.isEnabledFor(logging.DEBUG):
            _logger.debug(f"subsample {identity}: grid={len(grid)} kept={self.limit} seed={self.seed}")
        return Samples("subsample", len(grid), tuple(grid[i] for i in picked))


def element_slot(instance: PseudoalgebraInstance) -> Slot:
    pool = tuple((u, instance.grade(u)) for u in instance.sample_elements())
    return Slot(pool, instance.format_element)


def scalar_slot(instance: PseudoalgebraInstance) -> Slot:
    pool = tuple((f, instance.scalar_grade(f)) for f in instance.sample_scalars())
    return Slot(pool, lambda f: format_poly(instance.algebra, f))


def value_slot(values: ValueModule) -> Slot:
    pool = tuple((w, values.grade(w)) for w in values.sample_elements())
    return Slot(pool, values.format_element)
