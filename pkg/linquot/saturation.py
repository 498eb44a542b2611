"""Saturation: grow a relation span until its rank stops changing.

Round ``delta`` feeds the generators for that round (callers widen their
parameter ranges with ``delta``), then repeatedly applies the closure
operations to every newly found direction until nothing new appears. Both
generators and closures yield thunks so that a result leaving the piece can
be discarded and counted instead of aborting the run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Mapping, Optional, Tuple

from linquot.bounds import TruncationOverflow
from linquot.combination import Combination
from linquot.echelon import Subspace, echelonize, empty_subspace
from linquot.piece import FilteredPiece

_logger = logging.getLogger(__name__)

Thunk = Callable[[], Combination]
GeneratorFamily = Callable[[int], Iterable[Thunk]]
Closure = Callable[[Combination], Iterable[Thunk]]


class SaturationFailure(RuntimeError):
    def __init__(self, rank_history: Tuple[int, ...], context: str = "") -> None:
        where = f" for {context}" if context else ""
        super().__init__(f"rank did not stabilize{where}; history={list(rank_history)}")
        self.rank_history = rank_history


@dataclass(frozen=True)
class SaturationConfig:
    f_degree: int = 2
    delta_max: int = 6
    stable_rounds: int = 2
    close_under_brackets: bool = True

    def __post_init__(self) -> None:
        if self.f_degree < 1:
            raise ValueError(f"f_degree must be >= 1, got {self.f_degree}")
        if self.stable_rounds < 1:
            raise ValueError(f"stable_rounds must be >= 1, got {self.stable_rounds}")
        if self.delta_max < self.stable_rounds:
            raise ValueError(f"delta_max={self.delta_max} leaves no room for {self.stable_rounds} stable rounds")

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "SaturationConfig":
        known = {"f_degree", "delta_max", "stable_rounds", "close_under_brackets"}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ValueError(f"saturation: unknown keys {unknown}")
        return cls(
            f_degree=int(raw.get("f_degree", 2)),
            delta_max=int(raw.get("delta_max", 6)),
            stable_rounds=int(raw.get("stable_rounds", 2)),
            close_under_brackets=bool(raw.get("close_under_brackets", True)),
        )


@dataclass(frozen=True)
class SaturationResult:
    subspace: Subspace
    delta: int
    rank_history: Tuple[int, ...]
    discarded: int


def _evaluate(thunks: Iterable[Thunk], piece: FilteredPiece, counter: List[int]) -> List[dict]:
    vectors = []
    for thunk in thunks:
        try:
            vec = piece.to_vector(thunk())
        except TruncationOverflow:
            counter[0] += 1
            continue
        if vec:
            vectors.append(vec)
    return vectors


def saturate(
    piece: FilteredPiece,
    generators: GeneratorFamily,
    config: SaturationConfig,
    *,
    closure: Optional[Closure] = None,
    start: Optional[Subspace] = None,
    context: str = "",
) -> SaturationResult:
    subspace = start if start is not None else empty_subspace(piece)
    history: List[int] = []
    discarded = [0]
    for delta in range(config.delta_max + 1):
        pending = _evaluate(generators(delta), piece, discarded)
        while pending:
            residuals = [r for r in (subspace.reduce(v) for v in pending) if r]
            if not residuals:
                break
            old_pivots = set(subspace.pivots)
            subspace = echelonize(list(subspace.rows) + residuals, piece)
            if closure is None:
                break
            fresh = [
                row for pivot, row in zip(subspace.pivots, subspace.rows) if pivot not in old_pivots
            ]
            pending = []
            for row in fresh:
                pending.extend(_evaluate(closure(Combination(piece.from_vector(row))), piece, discarded))
        history.append(subspace.rank)
        _logger.debug(f"saturate {context}: delta={delta:<2} rank={subspace.rank:<5} discarded={discarded[0]}")
        window = history[-(config.stable_rounds + 1):]
        if len(window) == config.stable_rounds + 1 and len(set(window)) == 1:
            _logger.info(
                f"saturated {context}: rank={subspace.rank} delta={delta} history={history} discarded={discarded[0]}"
            )
            return SaturationResult(subspace, delta, tuple(history), discarded[0])
    raise SaturationFailure(tuple(history), context)
