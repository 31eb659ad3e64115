"""Experiment reports shared by the library entry points and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

VERDICTS = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class ExperimentReport:
    """Outcome of one experiment: what ran, what was measured, what it meant.

    verdict is pass, fail, or skipped; skipped marks runs cut short by a
    resource cap and never counts as a failure.
    """

    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    measured: Any = None
    predicted: Any = None
    verdict: str = "pass"
    wall_time_ms: float = 0.0
    note: str = ""

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "command": self.command,
            "parameters": dict(self.parameters),
            "measured": self.measured,
            "predicted": self.predicted,
            "verdict": self.verdict,
            "wall_time_ms": self.wall_time_ms,
        }
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def flat_dict(self) -> dict[str, Any]:
        """Flat single-construction shape: sizes, method, both numbers, equality."""
        p = self.parameters
        return {
            "n1": p.get("n1"),
            "n2": p.get("n2"),
            "method": p.get("method"),
            "measured": self.measured,
            "predicted": self.predicted,
            "equal": self.verdict == "pass",
            "wall_time_ms": self.wall_time_ms,
        }

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        bits = [self.command]
        if params:
            bits.append(params)
        if self.measured is not None:
            bits.append(f"measured={self.measured}")
        if self.predicted is not None:
            bits.append(f"predicted={self.predicted}")
        bits.append(f"verdict={self.verdict}")
        bits.append(f"({self.wall_time_ms:.0f} ms)")
        if self.note:
            bits.append(f"note: {self.note}")
        return " ".join(str(b) for b in bits)
