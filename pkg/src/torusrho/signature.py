"""Tristram-Levine signature functions of torus knots and iterated torus knots.

Points x in [0, 1] stand for zeta = exp(2 pi i x). For coprime p, q the torus
knot signature is

    s_{p,q}(x) = #Sigma - 2 #(Sigma intersected with (x, x+1)),
    Sigma = {k/p + l/q : 1 <= k < p, 1 <= l < q},

and the companion of a cable enters through s_{p,q;r}(x) = s_{p,q}({r x}).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .knots import IteratedTorusKnot, knot_triples
from .stepfunction import StepFunction

HALF = Fraction(1, 2)


def _check_pq(p: int, q: int):
    if p < 2 or q < 2:
        raise ValueError(f"need p, q >= 2, got ({p},{q})")
    if gcd(p, q) != 1:
        raise ValueError(f"({p},{q}) are not coprime")


def _check_x(x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x = {x} outside [0, 1]")
    return x


def sigma_set(p: int, q: int) -> list[Fraction]:
    """All of Sigma_{p,q}, enumerated. Only meant for small p, q."""
    _check_pq(p, q)
    return sorted(Fraction(k, p) + Fraction(l, q)
                  for k in range(1, p) for l in range(1, q))


def sigma_below_one(p: int, q: int) -> list[Fraction]:
    """Elements of Sigma_{p,q} in (0, 1); the rest are their reflections 2 - alpha."""
    _check_pq(p, q)
    out = []
    for k in range(1, p):
        # l/q < 1 - k/p  <=>  l < q (p - k) / p
        for l in range(1, -(-q * (p - k) // p)):
            out.append(Fraction(k * q + l * p, p * q))
    return sorted(out)


def sigma_window_count(p: int, q: int, x) -> int:
    """#{(k, l) : x < k/p + l/q < x + 1}, counted row by row in O(min(p, q))."""
    _check_pq(p, q)
    x = _check_x(x)
    if p > q:
        p, q = q, p
    count = 0
    for k in range(1, p):
        shift = Fraction(k, p)
        lo = max(floor(q * (x - shift)) + 1, 1)
        hi = min(ceil(q * (x + 1 - shift)) - 1, q - 1)
        if hi >= lo:
            count += hi - lo + 1
    return count


def s_pq(p: int, q: int, x) -> int:
    return (p - 1) * (q - 1) - 2 * sigma_window_count(p, q, x)


def s_pqr(p: int, q: int, r: int, x) -> int:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    x = _check_x(x)
    rx = r * x
    return s_pq(p, q, rx - floor(rx))


def _reflected_intervals(alphas: Counter, r: int = 1):
    """Weighted intervals of #Sigma - 2 #(Sigma in window), for a Sigma closed
    under alpha -> 2 - alpha, given by its elements below 1 (with multiplicity).

    The pair {alpha, 2 - alpha} contributes +2 on (alpha, 1 - alpha) when
    alpha < 1/2 and -2 on (1 - alpha, alpha) when alpha > 1/2; alpha = 1/2
    contributes 0 away from x = 1/2.
    """
    for alpha, mult in alphas.items():
        if alpha == HALF:
            continue
        if alpha < HALF:
            a, b, w = alpha, 1 - alpha, 2 * mult
        else:
            a, b, w = 1 - alpha, alpha, -2 * mult
        for k in range(r):
            yield (a + k) / r, (b + k) / r, w


def step_function_pqr(p: int, q: int, r: int = 1) -> StepFunction:
    """Exact step function of s_{p,q;r} on [0, 1]."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    alphas = Counter(sigma_below_one(p, q))
    return StepFunction.from_intervals(_reflected_intervals(alphas, r))


def knot_signature_function(knot: IteratedTorusKnot) -> StepFunction:
    intervals = []
    for t in knot_triples(knot):
        intervals.extend(_reflected_intervals(Counter(sigma_below_one(t.p, t.q)), t.r))
    return StepFunction.from_intervals(intervals)


@dataclass(frozen=True)
class SignatureValue:
    """Signature at a point. At a jump, ``value`` is the mean of the one-sided limits."""

    value: Fraction
    jump: bool


def signature_at(knot: IteratedTorusKnot, x, function: StepFunction | None = None) -> SignatureValue:
    f = function if function is not None else knot_signature_function(knot)
    left, right = f.limits(_check_x(x))
    return SignatureValue(Fraction(left + right, 2), left != right)


def dd_sigma_multiplicities(d: int) -> Counter:
    """Sigma_d = {i/d + j/d : 1 <= i, j < d} as a multiset, keyed by value."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    return Counter({Fraction(k, d): min(k - 1, 2 * d - 1 - k) for k in range(2, 2 * d - 1)})


def dd_link_step_function(d: int) -> StepFunction:
    """s_d for the (d, d) torus link; elements equal to 1 are always in the window."""
    mult = dd_sigma_multiplicities(d)
    ones = mult.pop(Fraction(1))
    below = Counter({a: m for a, m in mult.items() if a < 1})
    return StepFunction.from_intervals(_reflected_intervals(below), constant=-ones)
