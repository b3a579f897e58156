"""Pass/fail records shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class Report:
    title: str
    checks: List[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> Check:
        c = Check(name, bool(ok), detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def to_text(self) -> str:
        lines = [f"== {self.title}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks)"]
        for c in self.checks:
            tail = f"  {c.detail}" if c.detail else ""
            lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}{tail}")
        return "\n".join(lines)
