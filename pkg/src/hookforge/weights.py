"""Weight functions on shift vectors.

A weight is either an explicit finite table ``{shift: value}`` (shifts not in
the table weigh 0) or one of the named presets, which are defined on every
shift vector:

``ones``
    every shift weighs 1 (area / volume statistics)
``axes``
    1 when at most one coordinate of the shift is nonzero (hooks, rays)
``planes``
    1 when at most two coordinates are nonzero (2-dimensional hooks)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

Number = Union[int, Fraction]

PRESETS = ("ones", "axes", "planes")


def _coerce(value) -> Number:
    if isinstance(value, bool):
        raise TypeError("boolean weight value")
    if isinstance(value, int):
        return value
    if isinstance(value, (Fraction, str)):
        v = Fraction(value)
        return v.numerator if v.denominator == 1 else v
    raise TypeError(f"weights must be int, Fraction or decimal string, got {value!r}")


@dataclass(frozen=True)
class ShiftWeight:
    table: Mapping[tuple[int, ...], Number] = field(default_factory=dict)
    preset: str | None = None

    def __post_init__(self):
        if self.preset is not None and self.preset not in PRESETS:
            raise ValueError(f"unknown weight preset {self.preset!r}; choose from {PRESETS}")
        clean = {}
        for shift, value in self.table.items():
            shift = tuple(int(c) for c in shift)
            if any(c < 0 for c in shift):
                raise ValueError(f"shift {shift} has a negative coordinate")
            value = _coerce(value)
            if value < 0:
                raise ValueError(f"negative weight {value} at shift {shift}")
            if value:
                clean[shift] = value
        object.__setattr__(self, "table", clean)

    @classmethod
    def named(cls, name: str) -> "ShiftWeight":
        return cls(preset=name)

    def __call__(self, shift: tuple[int, ...]) -> Number:
        if self.preset == "ones":
            return 1
        if self.preset == "axes":
            return 1 if sum(1 for c in shift if c) <= 1 else 0
        if self.preset == "planes":
            return 1 if sum(1 for c in shift if c) <= 2 else 0
        return self.table.get(tuple(shift), 0)

    def describe(self):
        if self.preset is not None:
            return self.preset
        return [[list(m), str(v)] for m, v in sorted(self.table.items())]

    @classmethod
    def from_pairs(cls, pairs) -> "ShiftWeight":
        """Build from ``[[shift, value], ...]`` as used in the JSON formats."""
        table: dict[tuple[int, ...], Number] = {}
        for shift, value in pairs:
            key = tuple(int(c) for c in shift)
            if key in table:
                raise ValueError(f"duplicate shift {key}")
            table[key] = _coerce(value)
        return cls(table=table)
