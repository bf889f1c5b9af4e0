import random
from fractions import Fraction as F
from math import gcd

import pytest

from torusrho.knots import IteratedTorusKnot, NewtonPairSequence, newton_to_cables, parse_knot_descriptor
from torusrho.rho import (integrate_step, rho_algebraic, rho_closed, rho_dd_link,
                          rho_dd_link_integral, rho_integral)
from torusrho.signature import dd_link_step_function, knot_signature_function
from torusrho.stepfunction import StepFunction

from .corpora import random_iterated_knots, random_newton_sequences


@pytest.mark.parametrize("desc, rho", [("(2,3)", F(-4, 3)), ("(6,5)", F(-28, 3)),
                                       ("(2,5);(2,3)", F(-56, 15))])
def test_rho_closed_examples(desc, rho):
    knot = parse_knot_descriptor(desc)
    assert rho_closed(knot) == rho
    assert rho_integral(knot) == rho


def test_integrate_step_examples():
    assert integrate_step(knot_signature_function(parse_knot_descriptor("(2,3)"))) == F(-4, 3)
    assert integrate_step(StepFunction.constant(0)) == 0
    assert integrate_step(dd_link_step_function(3)) == F(-8, 3)


def test_rho_algebraic_examples():
    assert rho_algebraic(NewtonPairSequence(((2, 3),))) == F(-4, 3)
    assert rho_algebraic(NewtonPairSequence(((2, 3), (2, 1)))) == F(-304, 39)


def test_rho_algebraic_equals_closed_form_of_link():
    for np_ in random_newton_sequences(1000, seed=3):
        assert rho_algebraic(np_) == rho_closed(newton_to_cables(np_)[0])


@pytest.mark.parametrize("d, rho", [(2, F(-1)), (3, F(-8, 3)), (10, F(-33))])
def test_rho_dd_link(d, rho):
    assert rho_dd_link(d) == rho
    assert rho_dd_link_integral(d) == rho


def test_rho_dd_link_validation():
    with pytest.raises(ValueError):
        rho_dd_link(1)


def test_closed_equals_integral_on_small_corpus():
    for knot in random_iterated_knots(60, seed=11):
        rho = rho_closed(knot)
        assert rho == rho_integral(knot)
        assert rho < 0


def test_q_one_cable_contributes_zero():
    assert rho_closed(parse_knot_descriptor("(3,1);(2,3)")) == F(-4, 3)
    assert rho_integral(parse_knot_descriptor("(3,1);(2,3)")) == F(-4, 3)


def test_integral_additive_under_knot_sum():
    rng = random.Random(5)
    knots = random_iterated_knots(20, seed=17)
    for _ in range(20):
        a, b = rng.sample(knots, 2)
        fa, fb = knot_signature_function(a), knot_signature_function(b)
        assert integrate_step(fa + fb) == integrate_step(fa) + integrate_step(fb)
