"""Structured pass/fail/discrepancy reports shared by every verifier.

A report is a flat list of named checks.  The overall status is "fail" iff any
check failed; "discrepancy" marks a computed value disagreeing with a printed
reference value (this is recorded, never silently dropped, but is not a
verification failure).  Timing is 0 by default so that rendered reports are
byte-identical across runs; callers opt in to real timings.
"""

import json
import time
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy"


@dataclass
class Check:
    id: str
    status: str
    residual: str = ""
    millis: int = 0


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    version: str = ""

    @property
    def status(self) -> str:
        if any(c.status == FAIL for c in self.checks):
            return FAIL
        if any(c.status == DISCREPANCY for c in self.checks):
            return DISCREPANCY
        return PASS

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def add(self, check_id: str, passed: bool, residual="") -> Check:
        check = Check(check_id, PASS if passed else FAIL, "" if passed else str(residual))
        self.checks.append(check)
        return check

    def add_discrepancy(self, check_id: str, agrees: bool, detail="") -> Check:
        check = Check(
            check_id, PASS if agrees else DISCREPANCY, "" if agrees else str(detail)
        )
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(
                Check(prefix + c.id if prefix else c.id, c.status, c.residual, c.millis)
            )
        return self

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": self.status,
            "version": self.version,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "checks": [
                {
                    "id": c.id,
                    "status": c.status,
                    "residual": c.residual,
                    "millis": c.millis,
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {self.status}"]
        for k, v in sorted(self.params.items()):
            lines.append(f"  param {k} = {v}")
        for c in self.checks:
            line = f"  [{c.status:>11}] {c.id}"
            if c.residual:
                line += f"  residual: {c.residual}"
            lines.append(line)
        return "\n".join(lines)


class timer:
    """Context manager measuring wall time in integer milliseconds."""

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = int((time.perf_counter() - self.t0) * 1000)
        return False
