"""Invariants of unibranched plane curve singularities compared with rho_ab.

Everything here is exact: (K+D)^2 is an integer, H^2 and rho are rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .knots import NewtonPairSequence, derived_cable_numbers
from .rho import rho_algebraic, rho_dd_link

BOUND = Fraction(2, 9)


class BoundViolation(AssertionError):
    """-3 rho - H^2 fell outside (0, 2/9). The inequality is a theorem, so this
    means the computation is wrong."""


def _pa(np_: NewtonPairSequence):
    return [(p, a) for (p, _), a in zip(np_.pairs, derived_cable_numbers(np_))]


def kd_squared(np_: NewtonPairSequence) -> int:
    """(K+D)^2 on the minimal good resolution."""
    (p1, a1), *rest = _pa(np_)
    total = a1 * p1 - ceil(Fraction(a1, p1)) - ceil(Fraction(p1, a1))
    for p, a in rest:
        total += a * p - ceil(Fraction(a, p))
    return total


def h_squared(np_: NewtonPairSequence) -> Fraction:
    """H^2 for the nef part H of the Zariski-Fujita decomposition of K+D."""
    (p1, a1), *rest = _pa(np_)
    total = a1 * p1 - Fraction(a1, p1) - Fraction(p1, a1)
    for p, a in rest:
        total += a * p - Fraction(a, p)
    return total


@dataclass(frozen=True)
class SingularityInvariants:
    kd_squared: int
    h_squared: Fraction
    rho: Fraction
    delta: Fraction
    sharp_bound: Fraction  # 4 / (3 a_1 p_1)

    @property
    def within_bound(self) -> bool:
        return 0 < self.delta < BOUND

    @property
    def within_sharp_bound(self) -> bool:
        return self.delta < self.sharp_bound


def bound_report(np_: NewtonPairSequence) -> SingularityInvariants:
    rho = rho_algebraic(np_)
    h2 = h_squared(np_)
    p1, a1 = _pa(np_)[0]
    inv = SingularityInvariants(kd_squared(np_), h2, rho, -3 * rho - h2,
                                Fraction(4, 3 * a1 * p1))
    if not inv.within_bound:
        raise BoundViolation(f"{np_}: delta = {inv.delta} not in (0, 2/9)")
    if not inv.within_sharp_bound:
        raise BoundViolation(f"{np_}: delta = {inv.delta} >= {inv.sharp_bound}")
    return inv


@dataclass(frozen=True)
class DDLinkReport:
    d: int
    integral: Fraction
    h_squared: int
    delta: Fraction

    @property
    def within_bound(self) -> bool:
        return 0 < self.delta < BOUND


def dd_counterexample(d: int) -> DDLinkReport:
    """The (d, d) torus link: one blow-up resolves x^d = y^d, K + D = (2 - d) E
    is nef, so H^2 = (d - 2)^2; the knot bound fails for these links."""
    integral = rho_dd_link(d)
    h2 = (d - 2) ** 2
    return DDLinkReport(d, integral, h2, -3 * integral - h2)
