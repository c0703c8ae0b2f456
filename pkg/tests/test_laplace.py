import math

import pytest

from utils.errors import Divergent, InvalidParams, Unsupported
from utils.laplace import (
    lt_iml, lt_iml_rational, lt_iml_reference, lt_ml, lt_ml_rational, lt_ml_reference, lt_relation_residual,
)
from utils.mittag_leffler import iml
from utils.quadrature import laplace_quad
from utils.schemas import LTPoint, MLParams, QuadControl, RationalAlpha

S_VALUES = [2.0, 3.0, 5.0]


@pytest.mark.parametrize("s", S_VALUES)
def test_transform_of_exponential(s):
    assert lt_ml(MLParams(1.0, 1.0), LTPoint(s)).value == pytest.approx(1.0 / (s - 1.0), rel=1e-12)


@pytest.mark.parametrize("s", S_VALUES)
def test_transform_of_integral_exponential(s):
    expected = -math.log1p(-1.0 / s) / s
    assert lt_iml(MLParams(1.0, 1.0), LTPoint(s)).value == pytest.approx(expected, rel=1e-12)


def test_laplace_variable_must_exceed_one():
    with pytest.raises(InvalidParams):
        LTPoint(1.0)


@pytest.mark.parametrize("func", [lt_ml, lt_iml])
def test_shape_below_one_diverges(func):
    with pytest.raises(Divergent):
        func(MLParams(0.5, 1.0), LTPoint(3.0))


def test_rational_shape_below_one_diverges():
    with pytest.raises(Divergent):
        lt_iml_rational(RationalAlpha(1, 2), 1.0, LTPoint(3.0))


@pytest.mark.parametrize("p,q", [(2, 1), (3, 1), (3, 2)])
@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("s", [2.0, 5.0])
def test_rational_forms_match_series(p, q, beta, s):
    p_q = RationalAlpha(p, q)
    params = MLParams(p_q.value, beta)
    point = LTPoint(s)
    assert lt_ml_rational(p_q, beta, point).value == pytest.approx(lt_ml(params, point).value, rel=1e-9)
    assert lt_iml_rational(p_q, beta, point).value == pytest.approx(lt_iml(params, point).value, rel=1e-9)


@pytest.mark.parametrize("s", S_VALUES)
def test_rational_at_unit_shape(s):
    expected = -math.log1p(-1.0 / s) / s
    assert lt_iml_rational(RationalAlpha(1, 1), 1.0, LTPoint(s)).value == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("alpha,beta", [(2.0, 1.0), (3.0, 0.5)])
def test_series_against_quadrature(alpha, beta):
    params = MLParams(alpha, beta)
    s = 3.0
    oracle = laplace_quad(lambda t: iml(params, t).value, s, QuadControl(abs_tol=1e-14, rel_tol=1e-12),
                          growth=1.0, log_scale=1.0)
    assert lt_iml(params, LTPoint(s)).value == pytest.approx(oracle.value, rel=1e-7)


@pytest.mark.parametrize("alpha,beta", [(1.0, 1.0), (2.0, 2.0), (3.0, 1.0)])
@pytest.mark.parametrize("s", S_VALUES)
def test_ml_reference_rows(alpha, beta, s):
    params = MLParams(alpha, beta)
    point = LTPoint(s)
    assert lt_ml(params, point).value == pytest.approx(lt_ml_reference(params, point).value, rel=1e-10)


@pytest.mark.parametrize("alpha,beta", [(1.0, 1.0), (1.0, 0.5), (1.5, 1.0), (2.0, 3.0), (4.0, 1.0)])
@pytest.mark.parametrize("s", S_VALUES)
def test_iml_reference_rows(alpha, beta, s):
    params = MLParams(alpha, beta)
    point = LTPoint(s)
    assert lt_iml(params, point).value == pytest.approx(lt_iml_reference(params, point).value, rel=1e-9)


def test_reference_without_a_row():
    with pytest.raises(Unsupported):
        lt_iml_reference(MLParams(2.5, 1.0), LTPoint(2.0))


def test_relation_residual_is_reported_not_asserted():
    s = 3.0
    expected = -math.log(2.0 / 3.0) / s - 0.5 / s
    assert lt_relation_residual(RationalAlpha(1, 1), 1.0, LTPoint(s)) == pytest.approx(expected, rel=1e-12)
