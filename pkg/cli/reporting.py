"""Deterministic run reports: fixed-order text, JSON mirror, xxh3 digest."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import xxhash

from axiom_checks import CheckReport, vacuous_count


@dataclass(frozen=True)
class Section:
    """A titled block of plain lines followed by check reports.

    ``refused`` marks a construction that did not go through (the reason is in
    ``lines``); it counts as a failed verdict.
    """

    title: str
    lines: Tuple[str, ...] = ()
    checks: Tuple[CheckReport, ...] = ()
    refused: bool = False

    @property
    def verdict(self) -> bool:
        return not self.refused and all(r.verdict for r in self.checks)

    def render(self) -> List[str]:
        out = [f"== {self.title}"]
        out.extend(self.lines)
        for report in self.checks:
            out.extend(report.lines())
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "lines": list(self.lines),
            "checks": [r.to_dict() for r in self.checks],
            "refused": self.refused,
            "verdict": "PASS" if self.verdict else "FAIL",
        }


@dataclass(frozen=True)
class RunReport:
    command: str
    header: Tuple[Tuple[str, str], ...] = ()
    sections: Tuple[Section, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return all(s.verdict for s in self.sections)

    @property
    def verdict_text(self) -> str:
        return "PASS" if self.verdict else "FAIL"

    @property
    def vacuous_checks(self) -> int:
        """Checks that held only because no sample fit the truncation."""
        return sum(vacuous_count(s.checks) for s in self.sections)

    def body(self) -> str:
        lines = [" ".join([f"command={self.command}"] + [f"{k}={v}" for k, v in self.header])]
        for section in self.sections:
            lines.extend(section.render())
        if self.vacuous_checks:
            lines.append(f"vacuous_checks={self.vacuous_checks}")
        lines.append(f"verdict={self.verdict_text}")
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return xxhash.xxh3_64_hexdigest(self.body().encode("utf-8"))

    def render(self) -> str:
        return f"{self.body()}digest={self.digest()}\n"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "header": dict(self.header),
            "sections": [s.to_dict() for s in self.sections],
            "vacuous_checks": self.vacuous_checks,
            "verdict": self.verdict_text,
            "digest": self.digest(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)


def write_report(report: RunReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(report.to_json())
        f.write("\n")


def dimension_lines(rows: Sequence[Tuple[int, int, int, int]], *, delta: int | None = None) -> Tuple[str, ...]:
    """One line per weight: free, relation and quotient dimensions."""
    tail = f" saturation_delta={delta}" if delta is not None else ""
    return tuple(
        f"weight={k} dim_free={n} dim_relations={r} dim_quotient={q}{tail}" for k, n, r, q in rows
    )
