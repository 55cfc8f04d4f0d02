"""Pass/fail records shared by every verifier and by the CLI."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable


@dataclass
class Case:
    id: str
    status: str
    witness: list[str] = field(default_factory=list)
    ms: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "witness": list(self.witness),
            "ms": round(self.ms, 3) if timing else 0,
        }


class Report:
    def __init__(self, suite: str, params: dict | None = None):
        self.suite = suite
        self.params = dict(params or {})
        self.cases: list[Case] = []

    def check(self, case_id: str, ok: bool, witness: Iterable[str] = (), ms: float = 0.0) -> bool:
        self.cases.append(Case(case_id, "pass" if ok else "fail", [] if ok else [str(w) for w in witness], ms))
        return ok

    def timed(self, case_id: str, fn: Callable[[], tuple[bool, Iterable[str]]]) -> bool:
        """Run fn() -> (ok, witness) and record it with its wall time."""
        t0 = time.perf_counter()
        ok, witness = fn()
        return self.check(case_id, ok, witness, (time.perf_counter() - t0) * 1000)

    def zero_check(self, case_id: str, fn: Callable[[], object]) -> bool:
        """Record a case that passes iff fn() returns an element with no terms."""
        t0 = time.perf_counter()
        diff = fn()
        ms = (time.perf_counter() - t0) * 1000
        return self.check(case_id, diff.is_zero(), diff.witness(), ms)

    def merge(self, other: "Report") -> "Report":
        self.cases.extend(other.cases)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if c.status != "pass"]

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "cases": [c.to_dict(timing) for c in self.cases],
        }

    def __repr__(self):
        n_fail = len(self.failures)
        return f"Report({self.suite}: {len(self.cases) - n_fail}/{len(self.cases)} pass)"
