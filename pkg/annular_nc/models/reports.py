"""Verification reports and the collector the verifiers fill them with."""

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Any

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """
    Result of one verifier run.

    A failed report always carries a witness: the first check that failed and
    the objects it failed on.
    """

    theorem: str
    params: dict[str, int]
    passed: bool
    counts: dict[str, int] = field(default_factory=dict)
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed report needs a witness")

    def to_json(self, include_elapsed: bool = True) -> dict:
        data = {
            "theorem": self.theorem,
            "params": dict(self.params),
            "passed": self.passed,
            "counts": dict(self.counts),
            "witness": self.witness,
        }
        if self.details:
            data["details"] = self.details
        if include_elapsed:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data

    def dumps(self, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_json(include_elapsed), indent=2)

    @classmethod
    def from_json(cls, data: dict | str) -> "VerificationReport":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            theorem=data["theorem"],
            params=dict(data["params"]),
            passed=data["passed"],
            counts=dict(data["counts"]),
            witness=data["witness"],
            details=dict(data.get("details", {})),
            elapsed_ms=data.get("elapsed_ms", 0.0),
        )

    def summary(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        verdict = "passed" if self.passed else "FAILED"
        return f"{self.theorem}({params}): {verdict} in {self.elapsed_ms / 1000:.2f}s"


class ReportCollector:
    """
    Accumulates counts and the first failing check during a verification run.

    Args:
        theorem: Identifier written into the report
        params: Parameters written into the report
    """

    def __init__(self, theorem: str, **params: int):
        self.theorem = theorem
        self.params = params
        self.counts: dict[str, int] = {}
        self.witness: dict[str, Any] | None = None
        self.details: dict[str, Any] = {}
        self._start = time.perf_counter()

    def count(self, name: str, value: int = 1) -> None:
        self.counts[name] = self.counts.get(name, 0) + value

    def set_count(self, name: str, value: int) -> None:
        self.counts[name] = int(value)

    def check(self, condition: bool, name: str, **payload: Any) -> bool:
        """Record a check; the first failure becomes the witness."""
        if not condition:
            self.count("failures")
            if self.witness is None:
                self.witness = {"check": name, **payload}
                logger.info("%s: check %r failed: %s", self.theorem, name, payload)
        return bool(condition)

    def report(self) -> VerificationReport:
        elapsed = (time.perf_counter() - self._start) * 1000
        report = VerificationReport(
            theorem=self.theorem,
            params=self.params,
            passed=self.witness is None,
            counts=self.counts,
            witness=self.witness,
            details=self.details,
            elapsed_ms=elapsed,
        )
        logger.info(report.summary())
        return report
