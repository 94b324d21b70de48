"""Shared result type for the exhaustive claim verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["VerificationReport"]


@dataclass
class VerificationReport:
    """Outcome of one exhaustive check over a stated parameter range.

    A falsified claim is reported through ``status="fail"`` plus explicit
    counterexamples; verifiers never raise on mathematical failure, only on
    invalid usage.
    """

    claim: str
    range: dict[str, int]
    status: str  # "pass" | "fail"
    counterexamples: list[dict] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "range": dict(self.range),
            "status": self.status,
            "counterexamples": list(self.counterexamples),
            "witnesses": list(self.witnesses),
            "details": dict(self.details),
        }
