from fractions import Fraction as F
from math import ceil

import pytest

from torusrho.knots import NewtonPairSequence, derived_cable_numbers
from torusrho.singularity import (BOUND, BoundViolation, bound_report, dd_counterexample,
                                  h_squared, kd_squared)

from .corpora import random_newton_sequences

TREFOIL = NewtonPairSequence(((2, 3),))
TWO_PAIRS = NewtonPairSequence(((2, 3), (2, 1)))
T25 = NewtonPairSequence(((2, 5),))


@pytest.mark.parametrize("np_, kd, h2", [(TREFOIL, 3, F(23, 6)), (TWO_PAIRS, 22, F(70, 3)),
                                         (T25, 6, F(71, 10))])
def test_kd_and_h_examples(np_, kd, h2):
    assert kd_squared(np_) == kd
    assert h_squared(np_) == h2


@pytest.mark.parametrize("np_, delta", [(TREFOIL, F(1, 6)), (TWO_PAIRS, F(2, 39)),
                                        (T25, F(1, 10))])
def test_bound_report_examples(np_, delta):
    rep = bound_report(np_)
    assert rep.delta == delta
    assert rep.delta == -3 * rep.rho - rep.h_squared
    assert rep.within_bound and rep.within_sharp_bound


def test_trefoil_minus_three_rho_is_four():
    assert -3 * bound_report(TREFOIL).rho == 4
    assert -3 * bound_report(T25).rho == F(36, 5)


def test_bound_on_random_sequences():
    for np_ in random_newton_sequences(1000, seed=29):
        rep = bound_report(np_)
        assert 0 < rep.delta < BOUND
        a1, p1 = derived_cable_numbers(np_)[0], np_.pairs[0][0]
        assert rep.delta < F(4, 3 * a1 * p1)


def test_ceiling_gap():
    # each a_k / p_k (and p_1 / a_1) is a non-integer, so every ceiling rounds up
    for np_ in random_newton_sequences(300, seed=31):
        gap = h_squared(np_) - kd_squared(np_)
        n_ceilings = len(np_.pairs) + 1
        assert 0 < gap < n_ceilings
        a = derived_cable_numbers(np_)
        ps = [p for p, _ in np_.pairs]
        fractions = [F(a[0], ps[0]), F(ps[0], a[0])] + [F(ak, pk) for ak, pk in zip(a[1:], ps[1:])]
        assert gap == sum(ceil(x) - x for x in fractions)


def test_bound_violation_is_a_hard_error(monkeypatch):
    import torusrho.singularity as sing
    monkeypatch.setattr(sing, "h_squared", lambda np_: F(100))
    with pytest.raises(BoundViolation):
        sing.bound_report(TREFOIL)


@pytest.mark.parametrize("d, delta", [(2, 3), (3, 7)])
def test_dd_counterexample_examples(d, delta):
    rep = dd_counterexample(d)
    assert rep.delta == delta
    assert not rep.within_bound


def test_dd_counterexample_family():
    for d in range(2, 51):
        rep = dd_counterexample(d)
        assert rep.integral == F(-(d * d - 1), 3)
        assert rep.h_squared == (d - 2) ** 2
        assert rep.delta == 4 * d - 5
    assert dd_counterexample(3).integral == F(-8, 3)
    with pytest.raises(ValueError):
        dd_counterexample(1)
