import math

import pytest

from utils.elementary import EULER, e1, ei, trig_integrals
from utils.errors import DivergentIntegral, DomainError, ToleranceNotMet
from utils.quadrature import gk15, integrate, integrate_fi, integrate_singular, integrate_tail, laplace_quad
from utils.schemas import QuadControl

TIGHT = QuadControl(abs_tol=1e-15, rel_tol=1e-13)


def test_gk15_is_exact_for_degree_22():
    value, _, _ = gk15(lambda t: t ** 22, 0.0, 1.0)
    assert value == pytest.approx(1.0 / 23.0, rel=1e-14)


def test_reversed_limits():
    forward = integrate(math.exp, 0.0, 2.0).value
    assert integrate(math.exp, 2.0, 0.0).value == pytest.approx(-forward, rel=1e-15)


def test_breakpoints():
    res = integrate(abs, -1.0, 2.0, points=[0.0])
    assert res.value == pytest.approx(2.5, rel=1e-14)


@pytest.mark.parametrize("x", [0.5, 2.0, 5.0])
def test_fi_of_exp(x):
    res = integrate_fi(math.exp, 1.0, x, TIGHT)
    assert res.value == pytest.approx(ei(x).value - EULER - math.log(x), rel=1e-10)


@pytest.mark.parametrize("x", [1.0, 3.0, 8.0])
def test_fi_of_cos(x):
    res = integrate_fi(math.cos, 1.0, x, TIGHT)
    assert res.value == pytest.approx(trig_integrals("Ci", x).value - EULER - math.log(x), rel=1e-10)


def test_fi_splits_additively():
    f = math.cosh
    head = integrate_fi(f, 1.0, 1.5, TIGHT).value
    body = integrate(lambda t: (f(t) - 1.0) / t, 1.5, 3.0, TIGHT).value
    assert head + body == pytest.approx(integrate_fi(f, 1.0, 3.0, TIGHT).value, rel=1e-11)


def test_singular_endpoint():
    # ∫₀^x t^{-1/2} dt = 2√x
    res = integrate_singular(lambda t: 1.0 / math.sqrt(t), 4.0, 0.5, TIGHT)
    assert res.value == pytest.approx(4.0, rel=1e-12)


@pytest.mark.parametrize("x", [1.0, 3.0])
def test_tail_is_e1(x):
    res = integrate_tail(lambda t: math.exp(-t), x, lambda t: -t - math.log(t), TIGHT)
    assert res.value == pytest.approx(e1(x).value, rel=1e-10)


def test_tail_without_decay():
    with pytest.raises(DivergentIntegral):
        integrate_tail(math.sin, 1.0, lambda t: 0.0)


@pytest.mark.parametrize("s", [0.5, 2.0, 10.0])
def test_laplace_of_one(s):
    assert laplace_quad(lambda t: 1.0, s).value == pytest.approx(1.0 / s, rel=1e-9)


@pytest.mark.parametrize("s", [1.5, 2.0, 4.0])
def test_laplace_of_exp(s):
    res = laplace_quad(math.exp, s, TIGHT, growth=1.0)
    assert res.value == pytest.approx(1.0 / (s - 1.0), rel=1e-9)


def test_laplace_growth_at_or_above_s():
    with pytest.raises(DivergentIntegral):
        laplace_quad(math.exp, 1.0, growth=1.0)


def test_tolerance_not_met_carries_estimate():
    ctrl = QuadControl(abs_tol=1e-14, rel_tol=1e-14, max_depth=1)
    with pytest.raises(ToleranceNotMet) as info:
        integrate(lambda t: 1.0 if t < 0.3 else 0.0, 0.0, 1.0, ctrl)
    assert info.value.result is not None
    assert info.value.result.value == pytest.approx(0.3, abs=0.1)


def test_non_finite_integrand():
    with pytest.raises(DomainError):
        integrate(lambda t: math.inf, 0.0, 1.0)


def test_tighter_tolerance_does_not_grow_error():
    f = lambda t: 1.0 / (1.0 + t * t)
    loose = integrate(f, 0.0, 50.0, QuadControl(abs_tol=1e-8, rel_tol=1e-8))
    tight = integrate(f, 0.0, 50.0, QuadControl(abs_tol=1e-12, rel_tol=1e-12))
    assert tight.est_error <= loose.est_error
    assert tight.value == pytest.approx(math.atan(50.0), rel=1e-12)
