"""Pass/fail bookkeeping for the exhaustive identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    family: str
    name: str
    instances: int = 0
    failures: int = 0
    counterexample: Any = None

    def record(self, ok: bool, witness: Any = None) -> bool:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness
        return ok

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.family}/{self.name}  instances={self.instances}"
        if not self.passed:
            text += f"  failures={self.failures}  first={self.counterexample!r}"
        return text


@dataclass
class Report:
    checks: dict[tuple[str, str], Check] = field(default_factory=dict)

    def check(self, family: str, name: str) -> Check:
        key = (family, name)
        if key not in self.checks:
            self.checks[key] = Check(family, name)
        return self.checks[key]

    def merge(self, other: Report) -> Report:
        for key, theirs in other.checks.items():
            mine = self.check(*key)
            if mine.counterexample is None:
                mine.counterexample = theirs.counterexample
            mine.instances += theirs.instances
            mine.failures += theirs.failures
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def __getitem__(self, name: str) -> Check:
        for (_, cname), c in self.checks.items():
            if cname == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks.values()]
