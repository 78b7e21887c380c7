"""Structured verification reports with deterministic serialization.

A report is an ordered list of steps, each PASS/FAIL/AXIOM/SKIPPED with
its residuals and an optional certificate.  AXIOM steps record results
imported from the literature (they are never folded into PASS); SKIPPED
marks steps disabled by configuration.  The overall summary is PASS only
when every non-AXIOM step passed, FAIL when anything failed, and
INCONCLUSIVE when steps were skipped.

Exit-code contract: 0 for PASS, 1 for FAIL or INCONCLUSIVE, 2 for invalid
input or configuration.  JSON output carries a versioned, append-only
schema ("schema": 1) and serializes byte-identically for identical runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from .certificates import Certificate
from .exact import ExactScalar

__all__ = ["StepStatus", "Step", "VerificationReport", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1


class StepStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    AXIOM = "AXIOM"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Step:
    id: str
    description: str
    status: StepStatus
    residuals: Tuple[ExactScalar, ...] = ()
    certificate: Optional[Certificate] = None

    def to_json(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status.value,
            "residuals": [str(r) for r in self.residuals],
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


@dataclass
class VerificationReport:
    steps: Tuple[Step, ...]
    config: Dict[str, object] = field(default_factory=dict)

    @property
    def summary(self) -> str:
        statuses = [s.status for s in self.steps]
        if StepStatus.FAIL in statuses:
            return "FAIL"
        if StepStatus.SKIPPED in statuses:
            return "INCONCLUSIVE"
        return "PASS"

    @property
    def exit_code(self) -> int:
        return 0 if self.summary == "PASS" else 1

    def axiom_ids(self) -> Tuple[str, ...]:
        return tuple(s.id for s in self.steps if s.status is StepStatus.AXIOM)

    def to_json(self) -> Dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "summary": self.summary,
            "steps": [s.to_json() for s in self.steps],
            "config": self.config,
        }

    def emit(self, fmt: str = "text") -> bytes:
        if fmt == "json":
            return (json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n").encode()
        if fmt != "text":
            raise ValueError(f"unknown report format {fmt!r}")
        lines = [f"mhs-verify report (schema {SCHEMA_VERSION})"]
        for step in self.steps:
            lines.append(f"[{step.status.value:>7}] {step.id}: {step.description}")
            if step.residuals:
                lines.append(
                    "          residuals: " + ", ".join(str(r) for r in step.residuals)
                )
            if step.certificate is not None:
                lines.append(
                    "          certificate: "
                    + json.dumps(step.certificate.to_json(), sort_keys=True)
                )
        if self.config:
            lines.append("config: " + json.dumps(self.config, sort_keys=True))
        lines.append(f"summary: {self.summary}")
        return ("\n".join(lines) + "\n").encode()
