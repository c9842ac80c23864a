"""Verification reports: named checks with first-failure witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .field import Mod


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""

    def to_record(self) -> dict:
        rec = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            rec["witness"] = _plain(self.witness)
        if self.detail:
            rec["detail"] = self.detail
        return rec


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness=None, detail: str = "") -> Check:
        c = Check(name, bool(passed), None if passed else witness, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))

    def check(self, name: str):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_record(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [c.to_record() for c in self.checks],
            "info": _plain(self.info),
        }

    def to_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            if not c.passed and c.witness is not None:
                line += f" witness={json.dumps(_plain(c.witness), sort_keys=True)}"
            lines.append(line)
        for k in sorted(self.info):
            lines.append(f"  {k}: {json.dumps(_plain(self.info[k]), sort_keys=True)}")
        return "\n".join(lines)

    def __bool__(self):
        return self.ok


def _plain(x):
    """Convert scalars and containers to JSON-friendly values."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Mod):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def first_failure(items, predicate):
    """Return the first item for which ``predicate`` is false, else ``None``."""
    for it in items:
        if not predicate(it):
            return it
    return None
