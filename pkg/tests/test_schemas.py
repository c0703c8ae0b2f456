import pytest

from utils.errors import InvalidParams
from utils.schemas import (
    EvalResult, FunctionId, Family, GridSpec, PFQParams, QuadControl, RationalAlpha, SchemaValidator, SeriesControl,
    Spacing, WhittakerParams,
)


class TestRationalAlpha:
    def test_value(self):
        p_q = RationalAlpha(3, 2)
        assert p_q.value == 1.5
        assert str(p_q) == "3/2"

    @pytest.mark.parametrize("p,q", [(2, 4), (0, 1), (1, -2)])
    def test_rejected(self, p, q):
        with pytest.raises(InvalidParams):
            RationalAlpha(p, q)

    def test_from_float(self):
        assert RationalAlpha.from_float(2 / 3) == RationalAlpha(2, 3)
        with pytest.raises(InvalidParams):
            RationalAlpha.from_float(0.123456789)


class TestSeriesControl:
    def test_environment(self, monkeypatch):
        monkeypatch.setenv("SPECINT_REL_TOL", "1e-12")
        monkeypatch.setenv("SPECINT_MAX_TERMS", "50")
        ctrl = SeriesControl.from_env()
        assert ctrl.rel_tol == 1e-12
        assert ctrl.max_terms == 50

    def test_explicit_values_win(self, monkeypatch):
        monkeypatch.setenv("SPECINT_MAX_TERMS", "50")
        assert SeriesControl.from_env(max_terms=7).max_terms == 7

    def test_bad_environment(self, monkeypatch):
        monkeypatch.setenv("SPECINT_MAX_TERMS", "many")
        with pytest.raises(InvalidParams):
            SeriesControl.from_env()

    def test_positive(self):
        with pytest.raises(InvalidParams):
            SeriesControl(rel_tol=0.0)
        with pytest.raises(InvalidParams):
            QuadControl(max_depth=0)


class TestGridSpec:
    def test_linear(self):
        assert GridSpec(0.0, 1.0, 5).abscissae() == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])

    def test_log_needs_positive_start(self):
        with pytest.raises(InvalidParams):
            GridSpec(0.0, 1.0, 5, Spacing.LOG)

    @pytest.mark.parametrize("x_min,x_max,points", [(1.0, 1.0, 5), (0.0, 1.0, 1)])
    def test_rejected(self, x_min, x_max, points):
        with pytest.raises(InvalidParams):
            GridSpec(x_min, x_max, points)


def test_eval_result_rejects_negative_error():
    with pytest.raises(InvalidParams):
        EvalResult(1.0, -1e-3)


def test_pfq_terminating_degree():
    assert PFQParams((-3.0, 0.5), (1.0,), 2.0).terminating_degree() == 3
    assert PFQParams((0.5,), (1.0,), 2.0).terminating_degree() is None


def test_whittaker_checks():
    with pytest.raises(InvalidParams):
        WhittakerParams(0.0, -1.0).require_m_series()
    with pytest.raises(InvalidParams):
        WhittakerParams(0.0, -0.5).require_integrable()


def test_function_id_validation():
    assert SchemaValidator.validate_function_id(FunctionId(Family.MAINARDI_M, {'p': 1, 'q': 3}))
    with pytest.raises(InvalidParams):
        SchemaValidator.validate_function_id(FunctionId(Family.MAINARDI_M, {'p': 1.5, 'q': 3}))
    with pytest.raises(InvalidParams):
        SchemaValidator.validate_function_id(FunctionId(Family.ELEMENTARY, {}, name="I"))
