"""Pass/fail records shared by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    anchor: str = ""
    passed: bool = True
    failures: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.failures.append(msg)

    def check(self, cond: bool, msg: str) -> bool:
        if not cond:
            self.fail(msg)
        return cond

    def merge(self, other: "Report") -> None:
        if not other.passed:
            self.passed = False
            self.failures.extend(f"{other.name}: {m}" for m in other.failures)

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
            "failures": list(self.failures),
            "data": self.data,
        }

    def __bool__(self):
        return self.passed
