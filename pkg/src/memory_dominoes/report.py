"""Structured pass/fail records for identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass
class IdentityReport:
    """Outcome of checking an identity over a range of indices."""

    name: str
    checked: int = 0
    failures: List[Tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def record(self, key, ok: bool, detail=None) -> None:
        self.checked += 1
        if not ok:
            self.failures.append((key, detail) if detail is not None else (key,))

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [list(map(str, f)) for f in self.failures],
        }
