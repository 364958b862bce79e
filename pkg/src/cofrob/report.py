"""Structured reports: a human table plus a machine key/value document."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    title: str
    items: dict[str, Any] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, key: str, value: Any) -> "Report":
        self.items[key] = value
        return self

    def fail(self, message: str) -> "Report":
        self.violations.append(message)
        return self

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for k, v in other.items.items():
            self.items[prefix + k] = v
        self.violations.extend(prefix + v for v in other.violations)
        self.notes.extend(other.notes)
        return self

    def to_machine(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "items": {k: _plain(v) for k, v in self.items.items()},
            "violations": list(self.violations),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_machine(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = [self.title, "-" * len(self.title)]
        width = max((len(k) for k in self.items), default=0)
        for k, v in self.items.items():
            lines.append(f"{k.ljust(width)} : {_human(v)}")
        for n in self.notes:
            lines.append(f"note: {n}")
        if self.violations:
            lines.append(f"VIOLATIONS ({len(self.violations)}):")
            lines.extend(f"  - {v}" for v in self.violations)
        else:
            lines.append("status : ok")
        return "\n".join(lines) + "\n"


def _plain(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


def _human(v):
    if isinstance(v, (list, tuple)):
        return ", ".join(_human(x) for x in v) if v else "(empty)"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)
