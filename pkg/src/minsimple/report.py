"""Verification reports and their serialized form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .group import Group
from .perm import format_cycles

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"

REPORT_FIELDS = ("claim", "inputs", "expected", "computed", "verdict", "witness", "millis")


@dataclass
class Report:
    claim: str
    inputs: dict
    expected: Any
    computed: Any
    verdict: str
    witness: Optional[list[str]] = None
    millis: int = 0
    note: str = field(default="", compare=False)

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "inputs": self.inputs,
            "expected": _plain(self.expected),
            "computed": _plain(self.computed),
            "verdict": self.verdict,
            "millis": self.millis,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        text = f"{self.verdict:<8} {self.claim:<44} expected={_plain(self.expected)!s:<14} computed={_plain(self.computed)!s}"
        if self.witness:
            text += f"  witness={' '.join(self.witness)}"
        if self.note:
            text += f"  ({self.note})"
        return text


def witness_cycles(g: Optional[Group]) -> Optional[list[str]]:
    if g is None:
        return None
    return [format_cycles(x) for x in g.gens]


def _plain(value):
    """Markers and other non-JSON values become strings."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)
