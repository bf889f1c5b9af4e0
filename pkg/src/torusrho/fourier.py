"""Fourier transforms of the signature summands s_{p,q;r} and the equality test
for sums of them.

The normalised transform is

    n_{p,q;r}(t) = cot(t/pqr) cot(t/r) - cot(t/pr) cot(t/qr),

and for beta off the singular set

    int_0^1 exp(i pi beta x) s_{p,q;r}(x) dx
        = 2 exp(i pi beta/2) sin(pi beta/2) / (pi beta) * n_{p,q;r}(pi beta/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .knots import CableTriple
from .rho import torus_term
from .signature import step_function_pqr
from .stepfunction import StepFunction, add_step_functions

POLE_TOL = 1e-12
SINGULAR_BETA_TOL = 1e-6
_SERIES_RADIUS = 0.5


class SingularBetaError(ValueError):
    def __init__(self, beta, pole):
        self.beta = beta
        self.pole = pole
        super().__init__(f"beta = {beta} is within {SINGULAR_BETA_TOL} of the "
                         f"cotangent pole beta = {pole}")


@lru_cache(maxsize=None)
def _cot_series_coefficients(terms: int = 14) -> tuple[float, ...]:
    """c_k with (cot z - 1/z)/z = sum_k c_k z^(2k), k = 0, 1, ...

    c_k = (-1)^(k+1) 2^(2k+2) B_(2k+2) / (2k+2)!, Bernoulli numbers from the
    Akiyama-Tanigawa recurrence in exact arithmetic.
    """
    n_max = 2 * terms + 2
    bern = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        bern.append(a[0])
    # the recurrence yields B_1 = +1/2; only even indices are used
    coeffs = []
    for k in range(terms):
        n = 2 * k + 2
        coeffs.append(float((-1) ** (k + 1) * 2 ** n * bern[n] / math.factorial(n)))
    return tuple(coeffs)


def _cot_minus_inv_over_z(z: complex) -> complex:
    """(cot z - 1/z) / z, analytic at z = 0 with value -1/3."""
    if abs(z) < _SERIES_RADIUS:
        z2 = z * z
        acc = 0j
        for c in reversed(_cot_series_coefficients()):
            acc = acc * z2 + c
        return acc
    return (_cot(z) - 1 / z) / z


def _cot(z: complex) -> complex:
    if z.imag == 0:
        return complex(1.0 / math.tan(z.real))
    return 1 / cmath.tan(z)


def _cot_pi_rational(x: Fraction) -> float:
    """cot(pi x) for rational x not an integer, reduced mod 1 before rounding."""
    x = x - math.floor(x)
    if x > Fraction(1, 2):
        return -_cot_pi_rational(1 - x)
    return 1.0 / math.tan(math.pi * float(x))


def _cot_pairs(p: int, q: int, r: int):
    """The two cotangent products of n_{p,q;r}, each as (a, b, sign)."""
    return ((p * q * r, r, 1), (p * r, q * r, -1))


def _near_pi_multiple(z: complex) -> int | None:
    m = round(z.real / math.pi)
    if abs(z - m * math.pi) < POLE_TOL * max(1, abs(m)):
        return m
    return None


@dataclass(frozen=True)
class TransformValue:
    """n_{p,q;r}(t). ``residue`` is the 1/(t - t0) coefficient when t sits on a
    cotangent singularity (0 elsewhere); ``value`` is NaN when it is a pole."""

    value: complex
    pole_flag: bool
    residue: complex = 0j


def n_limit_at_zero(p: int, q: int) -> Fraction:
    return -torus_term(p, q) / 3


def n_pqr(p: int, q: int, r: int, t: complex) -> TransformValue:
    CableTriple(p, q, r)
    t = complex(t)
    period = math.pi * p * q * r
    m = round(t.real / period)
    u = t - m * period
    if abs(u / r) < 1.0:
        # near a period translate of 0: split off the 1/z part of each cotangent
        # so the cancelling double poles never get formed
        g = _cot_minus_inv_over_z
        val = (p * q * g(u / r) + g(u / (p * q * r)) / (p * q)
               - p / q * g(u / (q * r))
               - q / p * g(u / (p * r)))
        f = lambda a: g(u / a) * (u / a)
        val += f(p * q * r) * f(r) - f(p * r) * f(q * r)
        return TransformValue(complex(val), False)

    value = 0j
    residue = 0j
    for a, b, sign in _cot_pairs(p, q, r):
        za, zb = t / a, t / b
        sa, sb = _near_pi_multiple(za), _near_pi_multiple(zb)
        if sa is None and sb is None:
            value += sign * _cot(za) * _cot(zb)
            continue
        if sa is not None and sb is not None:
            # both factors singular only happens at period translates of 0
            raise AssertionError("double cotangent pole away from the period lattice")
        if sa is None:
            a, b, za, zb = b, a, zb, za
        c = _cot(zb)
        # cot(t/a) = a/u - u/(3a) + ..., cot(t/b) = c - (1 + c^2) u / b + ...
        residue += sign * a * c
        value += sign * (-a * (1 + c * c) / b)
    if abs(residue) > 1e-9 * max(1.0, abs(value)):
        return TransformValue(complex(math.nan, math.nan), True, residue)
    return TransformValue(value, False, residue)


def fourier_singular_pole(r: int, beta: complex) -> complex | None:
    """The cotangent pole nearest beta if beta is within tolerance of it.

    All cotangent arguments are pi beta / (2a) with r | a, so the poles are the
    nonzero even multiples of r (plus 0, where the expression has a limit).
    """
    m = round(complex(beta).real / (2 * r))
    if m != 0 and abs(beta - 2 * r * m) < SINGULAR_BETA_TOL:
        return 2 * r * m
    return None


def fourier_closed(p: int, q: int, r: int, beta: complex) -> complex:
    CableTriple(p, q, r)
    beta = complex(beta)
    if beta == 0:
        return complex(n_limit_at_zero(p, q))
    pole = fourier_singular_pole(r, beta)
    if pole is not None:
        raise SingularBetaError(beta, pole)
    half = math.pi * beta / 2
    nv = n_pqr(p, q, r, half)
    if nv.pole_flag:
        raise SingularBetaError(beta, beta)
    return 2 * cmath.exp(1j * half) * cmath.sin(half) / (math.pi * beta) * nv.value


def fourier_numeric(f: StepFunction, beta: complex) -> complex:
    """int_0^1 exp(i pi beta x) f(x) dx, summed interval by interval.

    For |beta| < 1e-9 this is just the integral of f.
    """
    beta = complex(beta)
    if abs(beta) < 1e-9:
        return complex(float(f.integral()))
    w = 1j * math.pi * beta
    total = 0j
    for a, b, v in f.intervals:
        if v:
            total += v * (cmath.exp(w * float(b)) - cmath.exp(w * float(a)))
    return total / w


# -- sums of transforms, residues, and the equality test ----------------------

SignedTriples = Sequence[tuple[int, CableTriple]]


def signed_terms(left: Iterable[CableTriple], right: Iterable[CableTriple]) -> list[tuple[int, CableTriple]]:
    return [(1, t) for t in left] + [(-1, t) for t in right]


def delta_hat(terms: SignedTriples, t: complex) -> complex:
    """Sum of sign * n_{p,q;r}(t); raises at a genuine pole of any term."""
    total = 0j
    for sign, tr in terms:
        nv = n_pqr(tr.p, tr.q, tr.r, t)
        if nv.pole_flag:
            raise ZeroDivisionError(f"n_{{{tr}}} has a pole at t = {t}")
        total += sign * nv.value
    return total


def residue_at_pi_multiple(terms: SignedTriples, N: int) -> float:
    """Residue of the signed sum at t0 = pi N, with exact pole classification."""
    res = 0.0
    for sign, tr in terms:
        for a, b, psign in _cot_pairs(tr.p, tr.q, tr.r):
            sa, sb = N % a == 0, N % b == 0
            if sa and sb:
                continue  # even Laurent expansion: no 1/u term
            if sa:
                res += sign * psign * a * _cot_pi_rational(Fraction(N, b))
            elif sb:
                res += sign * psign * b * _cot_pi_rational(Fraction(N, a))
    return res


def residue_at(terms: SignedTriples, t0: float) -> float:
    """Residue of the signed sum of normalised transforms at a candidate pole t0."""
    if t0 == 0:
        raise ValueError("t0 = 0 is a removable point, not a pole candidate")
    for _, tr in terms:
        m = round(t0 / (math.pi * tr.r))
        if m != 0 and abs(t0 / (math.pi * tr.r) - m) < 1e-9 * max(1, abs(m)):
            return residue_at_pi_multiple(terms, tr.r * m)
    raise ValueError(f"t0 = {t0} is not on the candidate pole lattice")


def residue_numeric(terms: SignedTriples, t0: float, steps=(1e-4, 1e-5)) -> complex:
    """Residue from (t - t0) * sum, symmetrised in +-h and Richardson-extrapolated."""
    def sym(h):
        return h * (delta_hat(terms, t0 + h) - delta_hat(terms, t0 - h)) / 2
    h1, h2 = steps
    a1, a2 = sym(h1), sym(h2)
    ratio = (h1 / h2) ** 2
    return (ratio * a2 - a1) / (ratio - 1)


def candidate_poles(terms: SignedTriples) -> tuple[int, list[int]]:
    """Period T (as t = T pi) and the candidate poles N (t0 = pi N) in (0, T)."""
    T = reduce(math.lcm, (tr.p * tr.q * tr.r for _, tr in terms), 1)
    rs = sorted({tr.r for _, tr in terms})
    poles = sorted({N for r in rs for N in range(r, T, r)})
    return T, poles


@dataclass(frozen=True)
class EqualityVerdict:
    condition_a: bool
    condition_b: bool
    max_residue: float
    pointwise_confirmed: bool
    verdict: bool
    period: int
    residues: tuple[tuple[int, float], ...] = field(default=(), repr=False)


def step_functions_almost_equal(f: StepFunction, g: StepFunction) -> bool:
    return f == g


def triple_set_function(triples: Iterable[CableTriple]) -> StepFunction:
    return add_step_functions([step_function_pqr(t.p, t.q, t.r) for t in triples])


def signatures_equal(left: Sequence[CableTriple], right: Sequence[CableTriple]) -> EqualityVerdict:
    """Decide whether sum_I s_{p,q;r} and sum_J s_{p,q;r} are almost equal.

    Condition (a) compares the values at t = 0 exactly; condition (b) checks
    that every residue of the difference of transforms vanishes over one
    period. The answer is cross-checked against the exact step functions.
    """
    terms = signed_terms(left, right)
    lhs = sum((torus_term(t.p, t.q) for t in left), Fraction(0))
    rhs = sum((torus_term(t.p, t.q) for t in right), Fraction(0))
    cond_a = lhs == rhs

    if terms:
        T, poles = candidate_poles(terms)
        scale = max(t.p * t.q * t.r for _, t in terms)
    else:
        T, poles, scale = 1, [], 1
    residues = tuple((N, abs(residue_at_pi_multiple(terms, N))) for N in poles)
    max_res = max((m for _, m in residues), default=0.0)
    cond_b = max_res < 1e-9 * (1 + scale)

    pointwise = step_functions_almost_equal(triple_set_function(left), triple_set_function(right))
    return EqualityVerdict(cond_a, cond_b, max_res, pointwise, cond_a and cond_b, T, residues)
