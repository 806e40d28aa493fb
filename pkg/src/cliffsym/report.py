"""Verification reports returned by the ``verify_*`` functions."""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_FAILURES_KEPT = 20


@dataclass
class Report:
    """Outcome of a verification run.

    ``checks`` counts individual exact comparisons; ``failures`` holds
    human-readable counterexamples (truncated); ``skipped`` explains checks
    that were deliberately not run; ``data`` carries computed values.
    """

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    skipped: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, message: str | None = None) -> bool:
        self.checks += 1
        if not ok:
            self.fail(message or "check failed")
        return ok

    def fail(self, message: str):
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(message)

    def merge(self, other: "Report", prefix: str | None = None) -> "Report":
        tag = f"{prefix or other.name}: "
        self.checks += other.checks
        self.failure_count += other.failure_count
        for msg in other.failures:
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(tag + msg)
        self.skipped.extend(tag + s for s in other.skipped)
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
            "skipped": list(self.skipped),
            "data": self.data,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checks} checks, {self.failure_count} failures"
        if self.skipped:
            text += f", {len(self.skipped)} skipped"
        return text
