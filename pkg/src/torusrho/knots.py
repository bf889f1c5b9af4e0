"""Iterated torus knots, cable triples and Newton pairs.

Knot descriptors list cables outermost first::

    (2,5);(2,3)        the (2,5)-cable on the trefoil

Newton descriptors list characteristic pairs innermost first::

    N:(2,3);(2,1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence


class DescriptorError(ValueError):
    """Raised for malformed or invalid knot / Newton / triple descriptors."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True)
class CablePair:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise DescriptorError(f"cable ({self.p},{self.q}): p must be >= 2")
        if self.q < 1:
            raise DescriptorError(f"cable ({self.p},{self.q}): q must be >= 1")
        if gcd(self.p, self.q) != 1:
            raise DescriptorError(
                f"cable ({self.p},{self.q}): gcd({self.p},{self.q}) != 1")

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class IteratedTorusKnot:
    """Cables listed outermost first; the last entry is the torus knot core."""

    cables: tuple[CablePair, ...]

    def __post_init__(self):
        if not self.cables:
            raise DescriptorError("a knot needs at least one cable")
        object.__setattr__(self, "cables", tuple(self.cables))
        inner = self.cables[-1]
        if inner.q < 2:
            raise DescriptorError(
                f"innermost pair {inner} names the unknot (q must be >= 2)")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "IteratedTorusKnot":
        return cls(tuple(CablePair(p, q) for p, q in pairs))

    @property
    def depth(self) -> int:
        return len(self.cables)

    def __str__(self):
        return format_knot(self)


@dataclass(frozen=True)
class CableTriple:
    """Index (p, q, r) of the summand s_{p,q;r}; r is the companion scaling."""

    p: int
    q: int
    r: int = 1

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise DescriptorError(f"triple {self}: p and q must be >= 2")
        if self.r < 1:
            raise DescriptorError(f"triple {self}: r must be >= 1")
        if gcd(self.p, self.q) != 1:
            raise DescriptorError(f"triple {self}: gcd(p, q) != 1")

    def __str__(self):
        return f"{self.p},{self.q},{self.r}"


@dataclass(frozen=True)
class NewtonPairSequence:
    """Characteristic pairs of a unibranched plane curve singularity,
    innermost (first Puiseux exponent) first."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(q)) for p, q in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise DescriptorError("at least one Newton pair is required")
        for p, q in pairs:
            if p < 2 or q < 1:
                raise DescriptorError(f"Newton pair ({p},{q}): need p >= 2, q >= 1")
            if gcd(p, q) != 1:
                raise DescriptorError(f"Newton pair ({p},{q}): gcd(p, q) != 1")
        p1, q1 = pairs[0]
        if q1 <= p1:
            raise DescriptorError(f"first Newton pair ({p1},{q1}) must have q > p")

    def __str__(self):
        return format_newton(self)


def derived_cable_numbers(np_: NewtonPairSequence) -> tuple[int, ...]:
    """a_1 = q_1, a_{k+1} = p_{k+1} p_k a_k + q_{k+1}."""
    (p_prev, a_prev), *rest = np_.pairs
    a = [a_prev]
    for p, q in rest:
        a_prev = p * p_prev * a_prev + q
        a.append(a_prev)
        p_prev = p
    return tuple(a)


def newton_to_cables(np_: NewtonPairSequence) -> tuple[IteratedTorusKnot, tuple[int, ...]]:
    """Link of the singularity as a knot, outermost cable (p_n, a_n) first."""
    a = derived_cable_numbers(np_)
    pairs = [(p, a_k) for (p, _), a_k in zip(np_.pairs, a)]
    return IteratedTorusKnot.from_pairs(reversed(pairs)), a


def cable_r_factors(knot: IteratedTorusKnot) -> list[int]:
    """r_k = q_1 ... q_{k-1}, with q's indexed outermost first."""
    qs = [c.q for c in knot.cables]
    return [prod(qs[:k]) for k in range(len(qs))]


def knot_triples(knot: IteratedTorusKnot) -> list[CableTriple]:
    """The triples (p_k, q_k, r_k) whose signature summands add up to the knot's.

    Cables with q = 1 are skipped: T_{p,1} is unknotted and contributes nothing.
    """
    return [CableTriple(c.p, c.q, r)
            for c, r in zip(knot.cables, cable_r_factors(knot)) if c.q >= 2]


# -- descriptor grammar -------------------------------------------------------

_INT = re.compile(r"\s*([+-]?\d+)\s*")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise DescriptorError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        m = _INT.match(self.text, self.pos)
        if not m:
            raise DescriptorError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group(1))

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, ch: str) -> bool:
        self.skip_ws()
        return self.text.startswith(ch, self.pos)


def _parse_pairs(sc: _Scanner) -> list[tuple[int, int]]:
    pairs = []
    while True:
        sc.expect("(")
        p = sc.integer()
        sc.expect(",")
        q = sc.integer()
        sc.expect(")")
        pairs.append((p, q))
        if sc.at_end():
            return pairs
        sc.expect(";")


def parse_knot_descriptor(text: str) -> IteratedTorusKnot:
    """Parse ``(p1,q1);(p2,q2);...`` (outermost first).

    A Newton descriptor (``N:...``) is accepted too and converted to its link.
    """
    stripped = text.lstrip()
    if stripped.startswith("N:"):
        return newton_to_cables(parse_newton_descriptor(text))[0]
    return IteratedTorusKnot.from_pairs(_parse_pairs(_Scanner(text)))


def parse_newton_descriptor(text: str) -> NewtonPairSequence:
    sc = _Scanner(text)
    sc.skip_ws()
    if not sc.peek("N:"):
        raise DescriptorError("Newton descriptor must start with 'N:'", sc.pos)
    sc.pos += 2
    return NewtonPairSequence(tuple(_parse_pairs(sc)))


def parse_triple_set(text: str) -> list[CableTriple]:
    """Parse a multiset of triples ``p,q,r;p,q,r;...`` (r defaults to 1)."""
    triples = []
    offset = 0
    for chunk in text.split(";"):
        fields = chunk.split(",")
        if len(fields) not in (2, 3) or not all(f.strip() for f in fields):
            raise DescriptorError(f"bad triple {chunk.strip()!r}", offset)
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise DescriptorError(f"non-integer in triple {chunk.strip()!r}", offset) from None
        triples.append(CableTriple(*values))
        offset += len(chunk) + 1
    return triples


def format_knot(knot: IteratedTorusKnot) -> str:
    return ";".join(str(c) for c in knot.cables)


def format_newton(np_: NewtonPairSequence) -> str:
    return "N:" + ";".join(f"({p},{q})" for p, q in np_.pairs)


def format_triple_set(triples: Sequence[CableTriple]) -> str:
    return ";".join(str(t) for t in triples)
