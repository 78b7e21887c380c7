"""Contradiction certificates: structured witnesses of impossibility."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping, Tuple

from .exact import ExactScalar

__all__ = ["Certificate", "CertificateKind"]


class CertificateKind(Enum):
    MUNZNER_MISMATCH = "MunznerMismatch"
    NO_REAL_SOLUTION = "NoRealSolution"
    SIGN_IMPOSSIBILITY = "SignImpossibility"
    TOTALLY_GEODESIC = "TotallyGeodesic"
    CONSISTENT = "Consistent"


@dataclass(frozen=True)
class Certificate:
    """Outcome record for one case or lemma.

    Non-consistent kinds carry the exact witnessing computation in
    ``details``; composite conclusions attach their per-case certificates.
    """

    kind: CertificateKind
    details: Mapping[str, object] = field(default_factory=dict)
    cases: Tuple["Certificate", ...] = ()

    def __post_init__(self) -> None:
        if self.kind is CertificateKind.MUNZNER_MISMATCH:
            if "expected" not in self.details or "found" not in self.details:
                raise ValueError("MunznerMismatch must carry expected and found values")

    @property
    def is_contradiction(self) -> bool:
        return self.kind in (
            CertificateKind.MUNZNER_MISMATCH,
            CertificateKind.NO_REAL_SOLUTION,
            CertificateKind.SIGN_IMPOSSIBILITY,
        )

    def to_json(self) -> Dict[str, object]:
        def encode(value: object) -> object:
            if isinstance(value, ExactScalar):
                return str(value)
            if isinstance(value, (list, tuple)):
                return [encode(v) for v in value]
            return value

        payload: Dict[str, object] = {
            "kind": self.kind.value,
            "details": {k: encode(v) for k, v in sorted(self.details.items())},
        }
        if self.cases:
            payload["cases"] = [c.to_json() for c in self.cases]
        return payload
