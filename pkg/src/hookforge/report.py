"""Machine-readable reports.

Numbers are serialized as decimal strings (``"576"``, ``"24/7"``) so big
integers and rationals survive JSON untouched.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any


def fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def parse_number(text: str):
    v = Fraction(text)
    return v.numerator if v.denominator == 1 else v


@dataclass
class Report:
    command: str
    instance: dict = field(default_factory=dict)
    kind: str | None = None
    multisets: dict[str, list[str]] = field(default_factory=dict)
    verdicts: dict[str, Any] = field(default_factory=dict)
    sums: dict[str, str] = field(default_factory=dict)
    products: dict[str, str] = field(default_factory=dict)
    counterexample: bool = False
    extra: dict[str, Any] = field(default_factory=dict)

    def add_multiset(self, name: str, ms) -> None:
        self.multisets[name] = [fmt(v) for v in ms]
        self.sums[name] = fmt(ms.total)
        self.products[name] = fmt(ms.product())

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
