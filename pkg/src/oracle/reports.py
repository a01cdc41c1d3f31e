"""
Verification report types
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..sequences.seqcore import Word


@dataclass(frozen=True, order=True)
class Counterexample:
    """A failing pair; ordering follows the lexicographic (x, y) pair order"""
    order_key: Tuple = field(repr=False)
    x: str = field(compare=False)
    y: str = field(compare=False)
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def of(cls, x: Word, y: Word, **details) -> "Counterexample":
        return cls((x.symbols, y.symbols), x.to_text(), y.to_text(), dict(details))

    def to_dict(self) -> Dict[str, Any]:
        return {"x": self.x, "y": self.y, "details": self.details}


@dataclass
class VerificationReport:
    check: str
    grid: Dict[str, Any]
    pairs: int = 0
    counterexample: Optional[Counterexample] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def result(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "grid": self.grid,
            "pairs": self.pairs,
            "result": self.result,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        line = f"{self.check}: {self.result.upper()} over {self.pairs:,} pair(s)"
        if self.counterexample is not None:
            line += f"; counterexample x={self.counterexample.x} y={self.counterexample.y}"
        return line
