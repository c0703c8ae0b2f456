import math

import pytest

from utils.elementary import EULER, ei, erfc
from utils.errors import DomainError, InvalidParams, RangeOverflow, Unsupported
from utils.mittag_leffler import iml, iml_rational, iml_reference, ml, ml_rational
from utils.schemas import MLParams, RationalAlpha

XS = [0.1, 0.5, 2.0, 5.0]


@pytest.mark.parametrize("x", XS)
def test_ml_exponential(x):
    assert ml(MLParams(1.0, 1.0), x).value == pytest.approx(math.exp(x), rel=1e-14)


@pytest.mark.parametrize("x", XS)
def test_ml_cosh(x):
    assert ml(MLParams(2.0, 1.0), x).value == pytest.approx(math.cosh(math.sqrt(x)), rel=1e-14)


@pytest.mark.parametrize("x", [0.1, 0.5, 2.0])
def test_ml_half(x):
    expected = math.exp(x * x) * erfc(-x).value
    assert ml(MLParams(0.5, 1.0), x).value == pytest.approx(expected, rel=1e-12)


def test_ml_at_origin():
    assert ml(MLParams(1.5, 3.0), 0.0).value == pytest.approx(0.5, rel=1e-15)


@pytest.mark.parametrize("x", XS)
def test_iml_of_exponential(x):
    expected = ei(x).value - EULER - math.log(x)
    assert iml(MLParams(1.0, 1.0), x).value == pytest.approx(expected, rel=1e-12)


# E_{1/4} grows like e^{x^4}; past x = 2 the difference quotient is dominated by its truncation error
@pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0, 2.0])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_iml_derivative_is_ml_over_x(alpha, x):
    params = MLParams(alpha, 1.0)
    h = 1e-5 * x
    slope = (iml(params, x + h).value - iml(params, x - h).value) / (2 * h)
    assert slope == pytest.approx((ml(params, x).value - 1.0) / x, rel=1e-6)


def test_iml_vanishes_at_origin():
    res = iml(MLParams(0.5, 2.0), 0.0)
    assert res.value == 0.0
    assert res.work == 0


def test_negative_argument():
    with pytest.raises(DomainError):
        iml(MLParams(1.0, 1.0), -0.5)
    with pytest.raises(DomainError):
        ml(MLParams(1.0, 1.0), -0.5)


@pytest.mark.parametrize("alpha,beta", [(0.0, 1.0), (1.0, 0.0), (-1.0, 2.0)])
def test_parameters_must_be_positive(alpha, beta):
    with pytest.raises(InvalidParams):
        MLParams(alpha, beta)


def test_series_overflow():
    with pytest.raises(RangeOverflow):
        ml(MLParams(0.25, 1.0), 30.0)


@pytest.mark.parametrize("p,q", [(1, 2), (3, 2), (2, 3), (2, 1)])
@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_rational_forms_match_series(p, q, beta, x):
    p_q = RationalAlpha(p, q)
    params = MLParams(p_q.value, beta)
    assert ml_rational(p_q, beta, x).value == pytest.approx(ml(params, x).value, rel=1e-9)
    assert iml_rational(p_q, beta, x).value == pytest.approx(iml(params, x).value, rel=1e-9)


def test_rational_at_origin():
    assert iml_rational(RationalAlpha(1, 2), 1.0, 0.0).value == 0.0


@pytest.mark.parametrize("alpha,beta", [(1.0, 1.0), (0.5, 1.0), (1.0 / 3.0, 0.5), (2.0, 2.0), (1.5, 1.0)])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_reference_rows(alpha, beta, x):
    params = MLParams(alpha, beta)
    assert iml(params, x).value == pytest.approx(iml_reference(params, x).value, rel=1e-10)


def test_reference_without_a_row():
    with pytest.raises(Unsupported):
        iml_reference(MLParams(2.5, 1.0), 1.0)


class TestShape:
    SHAPES = [0.25, 0.5, 1.0, 1.5, 2.0]

    @pytest.mark.parametrize("alpha", SHAPES)
    def test_increasing_in_x(self, alpha):
        params = MLParams(alpha, 1.0)
        values = [iml(params, x).value for x in (0.01, 0.5, 1.0, 2.0, 4.0)]
        assert values == sorted(values)
        assert abs(values[0]) < 0.02

    @pytest.mark.parametrize("x", [1.0, 2.0, 4.0])
    def test_decreasing_in_alpha(self, x):
        values = [iml(MLParams(alpha, 1.0), x).value for alpha in self.SHAPES]
        assert values == sorted(values, reverse=True)
