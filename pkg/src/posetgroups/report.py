"""Line-oriented verification reports.

One line per check: ``STATUS name  detail``.  The stable text (default)
contains no timings, so two runs over the same inputs are byte-identical;
``to_json`` carries durations for anyone who wants them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str
    duration_ms: float

    def line(self) -> str:
        return f"{self.status:<4} {self.name:<28} {self.detail}".rstrip()


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def counts(self) -> tuple[int, int, int]:
        statuses = [r.status for r in self.results]
        return statuses.count(PASS), statuses.count(FAIL), statuses.count(SKIP)

    def to_text(self) -> str:
        passed, failed, skipped = self.counts()
        lines = [f"subject: {self.subject}"]
        lines += [r.line() for r in self.results]
        lines.append(
            f"summary: {passed} passed, {failed} failed, {skipped} skipped"
        )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "subject": self.subject,
                "ok": self.ok,
                "results": [
                    {
                        "name": r.name,
                        "status": r.status,
                        "detail": r.detail,
                        "duration_ms": round(r.duration_ms, 3),
                    }
                    for r in self.results
                ],
            },
            indent=2,
        ) + "\n"
