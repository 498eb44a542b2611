"""Check reports and the per-identity evaluation loop."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from linquot import TruncationOverflow
from axiom_checks.sampling import Samples, SampleGrid, Slot

_logger = logging.getLogger(__name__)

# How many failures the text table spells out per identity; the JSON mirror keeps all of them.
SHOWN_FAILURES = 3


@dataclass(frozen=True)
class Failure:
    witness: Tuple[str, ...]
    residual: str

    def to_dict(self) -> Dict[str, Any]:
        return {"witness": list(self.witness), "residual": self.residual}


@dataclass(frozen=True)
class CheckReport:
    identity: str
    sample_count: int
    skipped: int
    mode: str
    failures: Tuple[Failure, ...] = ()

    @property
    def verdict(self) -> bool:
        return not self.failures

    @property
    def vacuous(self) -> bool:
        """No sample was evaluated, so a clean verdict says nothing."""
        return not self.failures and self.sample_count - self.skipped == 0

    @property
    def verdict_text(self) -> str:
        if not self.verdict:
            return "FAIL"
        return "VACUOUS" if self.vacuous else "PASS"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "sample_count": self.sample_count,
            "skipped": self.skipped,
            "mode": self.mode,
            "verdict": self.verdict_text,
            "failures": [f.to_dict() for f in self.failures],
        }

    def lines(self) -> List[str]:
        out = [
            f"{self.identity:<34} {self.verdict_text:<7}  samples={self.sample_count:<6} "
            f"skipped={self.skipped:<5} mode={self.mode}"
        ]
        for failure in self.failures[:SHOWN_FAILURES]:
            out.append(f"    witness=({', '.join(failure.witness)})")
            out.append(f"    residual={failure.residual}")
        hidden = len(self.failures) - SHOWN_FAILURES
        if hidden > 0:
            out.append(f"    ... {hidden} more failures")
        return out


def all_pass(reports: Sequence[CheckReport]) -> bool:
    """True when every identity held on at least one evaluated sample."""
    return all(r.verdict and not r.vacuous for r in reports)


def vacuous_count(reports: Sequence[CheckReport]) -> int:
    return sum(1 for r in reports if r.vacuous)


class Outcome(NamedTuple):
    """Residual for one sample; ``skipped`` when the sample left the truncation."""

    args: Tuple[Any, ...]
    residual: Any
    skipped: bool


def evaluate(samples: Samples, residual: Callable[..., Any]) -> List[Outcome]:
    out = []
    for args in samples.tuples:
        try:
            out.append(Outcome(args, residual(*args), False))
        except TruncationOverflow:
            out.append(Outcome(args, None, True))
    return out


def summarize(
    identity: str,
    samples: Samples,
    outcomes: Sequence[Outcome],
    slots: Sequence[Slot],
    fmt_residual: Callable[[Any], str],
) -> CheckReport:
    failures = []
    skipped = 0
    for outcome in outcomes:
        if outcome.skipped:
            skipped += 1
        elif outcome.residual:
            witness = tuple(slot.fmt(a) for slot, a in zip(slots, outcome.args))
            failures.append(Failure(witness, fmt_residual(outcome.residual)))
    report = CheckReport(identity, len(outcomes), skipped, samples.mode, tuple(failures))
    _logger.info(
        f"check {identity:<34} verdict={report.verdict_text} samples={report.sample_count} "
        f"skipped={skipped} failures={len(failures)}"
    )
    return report


def run_identity(
    identity: str,
    grid: SampleGrid,
    slots: Sequence[Slot],
    residual: Callable[..., Any],
    fmt_residual: Callable[[Any], str],
) -> CheckReport:
    """Evaluate ``residual`` on the grid over ``slots``; any nonzero value is a failure."""
    samples = grid.draw(identity, [slot.pool for slot in slots])
    return summarize(identity, samples, evaluate(samples, residual), slots, fmt_residual)


def report_from_defects(identity: str, checked: int, defects: Sequence[Tuple[Sequence[str], str]]) -> CheckReport:
    """Report for an exhaustive list of objects checked outside a sample grid."""
    failures = tuple(Failure(tuple(w), r) for w, r in defects)
    report = CheckReport(identity, checked, 0, "exhaustive", failures)
    _logger.info(f"check {identity:<34} verdict={report.verdict_text} samples={checked} failures={len(failures)}")
    return report


def find_report(reports: Sequence[CheckReport], identity: str) -> Optional[CheckReport]:
    for r in reports:
        if r.identity == identity:
            return r
    return None
