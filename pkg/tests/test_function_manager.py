import math

import pytest

from utils.elementary import EULER, ei
from utils.errors import DomainError, InvalidParams
from utils.function_manager import FIGURE_PRESETS, FunctionManager, figure_preset, parse_function
from utils.schemas import EvalResult, Family, GridSpec, Spacing

FUNCTIONS = FunctionManager()


class TestParseFunction:
    def test_family(self):
        fn = parse_function("iml", {'alpha': 1.0, 'beta': 1.0})
        assert fn.family is Family.IML
        assert fn.rational is None

    def test_rational(self):
        fn = parse_function("iml", {'p': 3, 'q': 2, 'beta': 1.0})
        assert fn.rational.value == 1.5

    @pytest.mark.parametrize("name", ["Si", "elementary:Si"])
    def test_elementary(self, name):
        fn = parse_function(name, {})
        assert fn.family is Family.ELEMENTARY
        assert fn.name == "Si"

    def test_unknown(self):
        with pytest.raises(InvalidParams):
            parse_function("zeta", {})

    def test_missing_parameter(self):
        with pytest.raises(InvalidParams):
            parse_function("iml", {'alpha': 1.0})

    def test_non_finite_parameter(self):
        with pytest.raises(InvalidParams):
            parse_function("iml", {'alpha': math.inf, 'beta': 1.0})


class TestEvaluate:
    def test_iml(self):
        fn = parse_function("iml", {'alpha': 1.0, 'beta': 1.0})
        assert FUNCTIONS.evaluate(fn, 1.0).value == pytest.approx(ei(1.0).value - EULER, rel=1e-13)

    def test_rational_iml_matches_alpha(self):
        by_alpha = FUNCTIONS.evaluate(parse_function("iml", {'alpha': 1.5, 'beta': 1.0}), 2.0)
        by_ratio = FUNCTIONS.evaluate(parse_function("iml", {'p': 3, 'q': 2, 'beta': 1.0}), 2.0)
        assert by_ratio.value == pytest.approx(by_alpha.value, rel=1e-10)

    def test_laplace_reads_s(self):
        fn = parse_function("lt_ml", {'alpha': 1.0, 'beta': 1.0})
        assert FUNCTIONS.evaluate(fn, 3.0).value == pytest.approx(0.5, rel=1e-12)
        with pytest.raises(InvalidParams):
            FUNCTIONS.evaluate(fn, 0.5)

    def test_mainardi_by_ratio_and_alpha(self):
        x = 1.0
        by_ratio = FUNCTIONS.evaluate(parse_function("mainardi_m", {'p': 1, 'q': 2}), x)
        by_alpha = FUNCTIONS.evaluate(parse_function("mainardi_m", {'alpha': 0.5}), x)
        assert by_ratio.value == pytest.approx(math.exp(-0.25) / math.sqrt(math.pi), rel=1e-10)
        assert by_alpha.value == pytest.approx(by_ratio.value, rel=1e-10)

    def test_whittaker(self):
        fn = parse_function("whittaker_m", {'kappa': 0.0, 'mu': 0.5})
        assert FUNCTIONS.evaluate(fn, 2.0).value == pytest.approx(2 * math.sinh(1.0), rel=1e-13)

    @pytest.mark.parametrize("name,params,x,expected", [
        ("gamma", {}, 5.0, 24.0),
        ("gammainc_lower", {'a': 1.0}, 2.0, 1 - math.exp(-2.0)),
        ("K", {'nu': 0.5}, 3.0, math.sqrt(math.pi / 6.0) * math.exp(-3.0)),
        ("laguerre", {'nu': 1.0}, 3.0, -2.0),
        ("erf", {}, 0.0, 0.0),
    ])
    def test_elementary(self, name, params, x, expected):
        result = FUNCTIONS.evaluate(parse_function(name, params), x)
        assert result.value == pytest.approx(expected, rel=1e-11, abs=1e-15)

    def test_non_finite_abscissa(self):
        with pytest.raises(InvalidParams):
            FUNCTIONS.evaluate(parse_function("iml", {'alpha': 1.0, 'beta': 1.0}), math.nan)

    def test_try_evaluate_returns_error(self):
        outcome = FUNCTIONS.try_evaluate(parse_function("iml", {'alpha': 1.0, 'beta': 1.0}), -1.0)
        assert isinstance(outcome, DomainError)


@pytest.mark.asyncio
async def test_tabulate_keeps_order():
    fn = parse_function("ml", {'alpha': 1.0, 'beta': 1.0})
    xs = GridSpec(0.0, 2.0, 9).abscissae()
    outcomes = await FUNCTIONS.tabulate(fn, xs)
    assert [o.value for o in outcomes] == pytest.approx([math.exp(x) for x in xs], rel=1e-14)


@pytest.mark.asyncio
async def test_tabulate_reports_failing_points():
    fn = parse_function("iml", {'alpha': 1.0, 'beta': 1.0})
    outcomes = await FUNCTIONS.tabulate(fn, [-1.0, 1.0])
    assert isinstance(outcomes[0], DomainError)
    assert isinstance(outcomes[1], EvalResult)


class TestPresets:
    def test_names(self):
        assert set(FIGURE_PRESETS) == {"ei-alpha", "ei-beta", "mi", "mi-tail", "wi", "wi-tail"}

    def test_labels(self):
        labels = [label for label, _ in FIGURE_PRESETS["ei-alpha"].curves]
        assert labels == ["alpha=0.25", "alpha=0.5", "alpha=1", "alpha=1.5", "alpha=2"]
        assert FIGURE_PRESETS["mi"].curves[0][0] == "kappa=0;mu=0.5"

    def test_override(self):
        preset = figure_preset("mi", points=10, spacing=Spacing.LOG)
        assert preset.grid.points == 10
        assert preset.grid.spacing is Spacing.LOG
        assert FIGURE_PRESETS["mi"].grid.points == 100

    def test_unknown(self):
        with pytest.raises(InvalidParams):
            figure_preset("nope")

    @pytest.mark.parametrize("name", ["mi-tail", "wi", "wi-tail"])
    def test_every_curve_evaluates(self, name):
        preset = figure_preset(name, points=4)
        for _, fn in preset.curves:
            for x in preset.grid.abscissae():
                assert math.isfinite(FUNCTIONS.evaluate(fn, x).value)
