"""Machine-readable check reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

MAX_RECORDED = 10


def render(v) -> str:
    """Readable exact rendering of scalars, sparse vectors and chains."""
    if isinstance(v, dict):
        if not v:
            return "0"
        return "{" + ", ".join(f"{k}: {render(c)}" for k, c in sorted(v.items(), key=lambda kv: str(kv[0]))) + "}"
    return str(v)


@dataclass
class Violation:
    axiom: str
    indices: Any
    lhs: str
    rhs: str

    def to_dict(self):
        return {"axiom": self.axiom, "indices": self.indices, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Report:
    """Outcome of an exhaustive or randomized identity sweep.

    ``checked`` counts identity instances evaluated, ``violations`` keeps the
    first few failures (the first one is the witness).
    """

    name: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    failures: int = 0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def witness(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def record(self, axiom, indices, lhs, rhs):
        self.failures += 1
        if len(self.violations) < MAX_RECORDED:
            self.violations.append(Violation(axiom, indices, render(lhs), render(rhs)))

    def expect(self, axiom, indices, lhs, rhs) -> bool:
        """Count one instance; record it if ``lhs != rhs``."""
        self.checked += 1
        if lhs == rhs:
            return True
        self.record(axiom, indices, lhs, rhs)
        return False

    def merge(self, other: "Report"):
        self.checked += other.checked
        self.failures += other.failures
        room = MAX_RECORDED - len(self.violations)
        self.violations.extend(other.violations[:max(room, 0)])
        return self

    def to_dict(self):
        out = {
            "suite": self.name,
            "status": "pass" if self.ok else "fail",
            "checked": self.checked,
            "failures": self.failures,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    def __str__(self):
        status = "pass" if self.ok else f"FAIL ({self.failures} failures)"
        s = f"{self.name}: {status}, {self.checked} instances"
        if self.witness is not None:
            w = self.witness
            s += f"\n  first violation of {w.axiom} at {w.indices}:\n    lhs={w.lhs}\n    rhs={w.rhs}"
        return s
