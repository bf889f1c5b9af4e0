"""Exact piecewise-constant functions on [0, 1].

Values are only tracked on the open intervals between breakpoints, so two
functions that differ at finitely many points have the same representation.
"""

from __future__ import annotations

import bisect
import csv
import io
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class StepFunction:
    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        vals = tuple(self.values)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)
        if len(vals) != len(bps) - 1 or not vals:
            raise ValueError("need exactly one value per interval")
        if bps[0] != 0 or bps[-1] != 1:
            raise ValueError("breakpoints must run from 0 to 1")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if any(a == b for a, b in zip(vals, vals[1:])):
            raise ValueError("adjacent values must differ (use StepFunction.canonical)")

    @classmethod
    def canonical(cls, breakpoints: Sequence, values: Sequence[int]) -> "StepFunction":
        """Build a step function, dropping breakpoints that separate equal values."""
        bps = [Fraction(breakpoints[0])]
        vals: list[int] = []
        for b, v in zip(breakpoints[1:], values):
            if vals and vals[-1] == v:
                bps[-1] = Fraction(b)
            else:
                vals.append(v)
                bps.append(Fraction(b))
        return cls(tuple(bps), tuple(vals))

    @classmethod
    def constant(cls, value: int) -> "StepFunction":
        return cls((ZERO, ONE), (value,))

    @classmethod
    def from_intervals(cls, weighted: Iterable[tuple[Fraction, Fraction, int]],
                       constant: int = 0) -> "StepFunction":
        """Sum of ``weight * indicator((a, b))`` over the triples, plus a constant."""
        delta: dict[Fraction, int] = defaultdict(int)
        for a, b, w in weighted:
            if not 0 <= a < b <= 1:
                raise ValueError(f"interval ({a}, {b}) not inside [0, 1]")
            delta[Fraction(a)] += w
            delta[Fraction(b)] -= w
        points = sorted(set(delta) | {ZERO, ONE})
        values = []
        running = constant
        for x in points[:-1]:
            running += delta[x]
            values.append(running)
        return cls.canonical(points, values)

    @property
    def intervals(self) -> list[tuple[Fraction, Fraction, int]]:
        return list(zip(self.breakpoints, self.breakpoints[1:], self.values))

    def value_on(self, x) -> int:
        """Value on the open interval containing x (x must not be an interior breakpoint)."""
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError(f"{x} outside [0, 1]")
        i = bisect.bisect_right(self.breakpoints, x) - 1
        i = min(max(i, 0), len(self.values) - 1)
        if 0 < x < 1 and x == self.breakpoints[i]:
            raise ValueError(f"{x} is a breakpoint")
        return self.values[i]

    def limits(self, x) -> tuple[int, int]:
        """One-sided limits (left, right) at x; at 0 and 1 the single available side is used twice."""
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError(f"{x} outside [0, 1]")
        i = bisect.bisect_left(self.breakpoints, x)
        if i < len(self.breakpoints) and self.breakpoints[i] == x:
            left = self.values[max(i - 1, 0)]
            right = self.values[min(i, len(self.values) - 1)]
            return left, right
        v = self.values[i - 1]
        return v, v

    def is_breakpoint(self, x) -> bool:
        return Fraction(x) in self.breakpoints[1:-1]

    def integral(self) -> Fraction:
        return sum(((b - a) * v for a, b, v in self.intervals), ZERO)

    def __add__(self, other: "StepFunction") -> "StepFunction":
        return add_step_functions([self, other])

    def __neg__(self) -> "StepFunction":
        return StepFunction(self.breakpoints, tuple(-v for v in self.values))

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        return add_step_functions([self, -other])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x_start", "x_end", "value"])
        for a, b, v in self.intervals:
            w.writerow([format_rational(a), format_rational(b), v])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "StepFunction":
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise ValueError("empty step-function CSV")
        bps = [parse_rational(rows[0]["x_start"])]
        vals = []
        for row in rows:
            if parse_rational(row["x_start"]) != bps[-1]:
                raise ValueError("CSV intervals are not contiguous")
            bps.append(parse_rational(row["x_end"]))
            vals.append(int(row["value"]))
        return cls.canonical(bps, vals)


def add_step_functions(functions: Sequence[StepFunction]) -> StepFunction:
    if not functions:
        return StepFunction.constant(0)
    points = sorted(set().union(*(f.breakpoints for f in functions)))
    values = []
    for a, b in zip(points, points[1:]):
        mid = (a + b) / 2
        values.append(sum(f.value_on(mid) for f in functions))
    return StepFunction.canonical(points, values)
