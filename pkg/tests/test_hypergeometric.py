import math

import pytest

from utils.errors import Divergent, InvalidParams, NoConvergence, RangeOverflow
from utils.hypergeometric import gauss_2f1_terminating, hyp, pfq, signed_exp
from utils.schemas import PFQParams, SeriesControl


@pytest.mark.parametrize("z", [-3.0, 0.0, 1.5, 10.0])
def test_0f0_is_exp(z):
    assert pfq(PFQParams((), (), z)).value == pytest.approx(math.exp(z), rel=1e-14)


def test_1f0_binomial():
    assert pfq(PFQParams((2.0,), (), 0.5)).value == pytest.approx(4.0, rel=1e-13)


@pytest.mark.parametrize("z", [0.1, 1.0, 4.0])
def test_kummer_closed_form(z):
    assert hyp([1.0], [2.0], z) == pytest.approx(math.expm1(z) / z, rel=1e-14)


def test_gauss_log():
    z = 0.5
    assert hyp([1.0, 1.0], [2.0], z) == pytest.approx(-math.log1p(-z) / z, rel=1e-13)


def test_terminating_series_is_a_polynomial():
    result = pfq(PFQParams((-2.0, 1.0), (1.0,), 3.0))
    assert result.value == pytest.approx(4.0, rel=1e-14)
    assert result.work <= 3


def test_terminating_methods_agree():
    by_sum = gauss_2f1_terminating(5, 0.7, 1.3, 2.5, method="sum")
    by_recurrence = gauss_2f1_terminating(5, 0.7, 1.3, 2.5, method="recurrence")
    assert by_recurrence == pytest.approx(by_sum, rel=1e-12)


def test_lower_pole_rejected():
    with pytest.raises(InvalidParams):
        pfq(PFQParams((1.0,), (-2.0,), 0.5))


def test_termination_before_lower_pole_is_allowed():
    # (1 - z) from 2F1(-1, 1; -2; z) cut at degree one
    assert pfq(PFQParams((-1.0, 1.0), (-2.0,), 0.5)).value == pytest.approx(1.0 + 0.5 / 2.0, rel=1e-14)


@pytest.mark.parametrize("upper,lower,z", [
    ((1.0, 1.0, 1.0), (1.0,), 0.1),
    ((1.0, 1.0), (2.0,), 1.0),
    ((2.0,), (), -1.5),
])
def test_divergent_series(upper, lower, z):
    with pytest.raises(Divergent):
        pfq(PFQParams(upper, lower, z))


def test_term_cap_reports_no_convergence():
    with pytest.raises(NoConvergence):
        pfq(PFQParams((), (), 50.0), SeriesControl(max_terms=5))


def test_signed_exp_overflow():
    with pytest.raises(RangeOverflow):
        signed_exp(800.0)
    assert signed_exp(0.0, -1) == -1.0
    assert signed_exp(-800.0) == 0.0


def test_range_overflow_is_an_overflow_error():
    with pytest.raises(OverflowError):
        signed_exp(1000.0)


@pytest.mark.parametrize("a,b,z", [(0.3, 1.7, 2.0), (-0.5, 0.5, 5.0), (2.0, 3.5, -4.0)])
def test_kummer_against_scipy(a, b, z):
    special = pytest.importorskip("scipy.special")
    assert hyp([a], [b], z) == pytest.approx(special.hyp1f1(a, b, z), rel=1e-12)
