"""rho_ab of iterated torus knots: the integral of the signature over [0, 1]."""

from __future__ import annotations

from fractions import Fraction

from .knots import (IteratedTorusKnot, NewtonPairSequence, derived_cable_numbers)
from .signature import dd_link_step_function, knot_signature_function
from .stepfunction import StepFunction


def integrate_step(f: StepFunction) -> Fraction:
    return f.integral()


def torus_term(p: int, q: int) -> Fraction:
    """(p - 1/p)(q - 1/q), the (negated, tripled) contribution of one cable."""
    return (p - Fraction(1, p)) * (q - Fraction(1, q))


def rho_closed(knot: IteratedTorusKnot) -> Fraction:
    return -sum((torus_term(c.p, c.q) for c in knot.cables), Fraction(0)) / 3


def rho_integral(knot: IteratedTorusKnot) -> Fraction:
    return integrate_step(knot_signature_function(knot))


def rho_algebraic(np_: NewtonPairSequence) -> Fraction:
    # kept in the expanded a p - a/p - p/a + 1/(p a) shape on purpose: it is
    # compared against rho_closed, which factors the same quantity
    total = Fraction(0)
    for (p, _), a in zip(np_.pairs, derived_cable_numbers(np_)):
        total += a * p - Fraction(a, p) - Fraction(p, a) + Fraction(1, p * a)
    return -total / 3


def rho_dd_link(d: int) -> Fraction:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    return Fraction(-(d - 1) * (d + 1), 3)


def rho_dd_link_integral(d: int) -> Fraction:
    return integrate_step(dd_link_step_function(d))
