"""
Function Manager for specint
Routes a FunctionId and an abscissa to the library routine that evaluates it
"""
import asyncio
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .elementary import (
    airy_ai, bessel_mod, error_family, exp_integrals, gamma_family, hyp_integrals, incomplete_gamma,
    laguerre_nu, struve_l, trig_integrals,
)
from .errors import InvalidParams, SpecialFunctionError
from .laplace import lt_iml, lt_iml_rational, lt_ml, lt_ml_rational
from .mittag_leffler import iml, iml_rational, ml, ml_rational
from .schemas import (
    ELEMENTARY_PARAMS, EvalResult, Family, FunctionId, GridSpec, LTPoint, MLParams, QuadControl,
    SchemaValidator, SeriesControl, Spacing, WhittakerParams, WrightParams,
)
from .whittaker import integral_mi, integral_mi_tail, integral_wi, integral_wi_tail, whittaker_m, whittaker_w
from .wright import (
    integral_mainardi, integral_mainardi_series, integral_wright, integral_wright_rational, mainardi,
    mainardi_rational, wright_rational, wright_w,
)

logger = logging.getLogger(__name__)

Outcome = Union[EvalResult, SpecialFunctionError]


def parse_function(name: str, params: Dict[str, float]) -> FunctionId:
    """
    Build a FunctionId from a CLI --fn value

    Args:
        name: a family value ("iml", "mi_tail", ...), an elementary name, or "elementary:<name>"
        params: named parameters given on the command line

    Returns:
        Validated FunctionId
    """
    if name.startswith("elementary:"):
        name = name.split(":", 1)[1]
    try:
        family = Family(name)
    except ValueError:
        if name not in ELEMENTARY_PARAMS:
            raise InvalidParams(f"unknown function {name!r}") from None
        fn = FunctionId(Family.ELEMENTARY, dict(params), name=name)
    else:
        if family is Family.ELEMENTARY:
            raise InvalidParams("use elementary:<name> to select an elementary function")
        fn = FunctionId(family, dict(params))
    for key, value in fn.params.items():
        SchemaValidator.validate_finite(key, value)
    SchemaValidator.validate_function_id(fn)
    return fn


# Elementary names that map onto a dispatcher taking (which, x)
_ELEMENTARY_WHICH: Dict[str, Tuple[Callable[[str, float], EvalResult], str]] = {
    'gamma': (gamma_family, "gamma"),
    'lngamma': (gamma_family, "ln_gamma"),
    'rgamma': (gamma_family, "rgamma"),
    'e1': (exp_integrals, "e1"),
    'ei': (exp_integrals, "ei"),
    'Si': (trig_integrals, "Si"),
    'si': (trig_integrals, "si"),
    'Ci': (trig_integrals, "Ci"),
    'Shi': (hyp_integrals, "Shi"),
    'Chi': (hyp_integrals, "Chi"),
    'erf': (error_family, "erf"),
    'erfc': (error_family, "erfc"),
    'erfi': (error_family, "erfi"),
    'dawson': (error_family, "dawson"),
    'Ai': (airy_ai, "Ai"),
    'Aip': (airy_ai, "Ai_prime"),
}

_MAINARDI_KINDS = {
    Family.MAINARDI_F: "F",
    Family.MAINARDI_M: "M",
    Family.IMAINARDI_F: "Fi",
    Family.IMAINARDI_M: "Mi",
}


class FunctionManager:
    """
    Single entry point for evaluating any registered function
    Holds the series and quadrature policies shared by every call
    """

    def __init__(self, ctrl: Optional[SeriesControl] = None, qctrl: Optional[QuadControl] = None):
        """
        Initialize the function manager

        Args:
            ctrl: series policy, SeriesControl.from_env() when omitted
            qctrl: quadrature policy for the tail integrals
        """
        self.ctrl = ctrl if ctrl is not None else SeriesControl.from_env()
        self.qctrl = qctrl if qctrl is not None else QuadControl()

    def evaluate(self, fn: FunctionId, x: float) -> EvalResult:
        """
        Evaluate fn at x (x is the Laplace variable s for lt_ml / lt_iml)

        Raises:
            SpecialFunctionError: whatever the routine raises
        """
        SchemaValidator.validate_finite("x", x)
        if fn.family is Family.ELEMENTARY:
            return self._elementary(fn, x)
        if fn.family in (Family.ML, Family.IML, Family.LT_ML, Family.LT_IML):
            return self._mittag_leffler(fn, x)
        if fn.family in (Family.WRIGHT, Family.IWRIGHT):
            return self._wright(fn, x)
        if fn.family in _MAINARDI_KINDS:
            return self._mainardi(fn, x)
        return self._whittaker(fn, x)

    def _mittag_leffler(self, fn: FunctionId, x: float) -> EvalResult:
        beta = fn.params['beta']
        p_q = fn.rational
        laplace = fn.family in (Family.LT_ML, Family.LT_IML)
        arg = LTPoint(x) if laplace else x
        if p_q is not None:
            func = {
                Family.ML: ml_rational,
                Family.IML: iml_rational,
                Family.LT_ML: lt_ml_rational,
                Family.LT_IML: lt_iml_rational,
            }[fn.family]
            return func(p_q, beta, arg, self.ctrl)
        func = {Family.ML: ml, Family.IML: iml, Family.LT_ML: lt_ml, Family.LT_IML: lt_iml}[fn.family]
        return func(MLParams(fn.params['alpha'], beta), arg, self.ctrl)

    def _wright(self, fn: FunctionId, x: float) -> EvalResult:
        beta = fn.params['beta']
        p_q = fn.rational
        if p_q is not None:
            func = wright_rational if fn.family is Family.WRIGHT else integral_wright_rational
            return func(p_q, beta, x, self.ctrl)
        func = wright_w if fn.family is Family.WRIGHT else integral_wright
        return func(WrightParams(fn.params['alpha'], beta), x, self.ctrl)

    def _mainardi(self, fn: FunctionId, x: float) -> EvalResult:
        kind = _MAINARDI_KINDS[fn.family]
        p_q = fn.rational
        integral = fn.family in (Family.IMAINARDI_F, Family.IMAINARDI_M)
        if p_q is not None:
            if integral:
                return integral_mainardi(kind, p_q, x, self.ctrl)
            return mainardi_rational(kind, p_q, x, self.ctrl)
        if integral:
            return integral_mainardi_series(kind, fn.params['alpha'], x, self.ctrl)
        return mainardi(kind, fn.params['alpha'], x, self.ctrl)

    def _whittaker(self, fn: FunctionId, x: float) -> EvalResult:
        params = WhittakerParams(fn.params['kappa'], fn.params['mu'])
        if fn.family is Family.WHITTAKER_M:
            return whittaker_m(params, x, self.ctrl)
        if fn.family is Family.WHITTAKER_W:
            return whittaker_w(params, x, self.ctrl)
        if fn.family is Family.MI:
            return integral_mi(params, x, self.ctrl)
        if fn.family is Family.WI:
            return integral_wi(params, x, self.ctrl)
        if fn.family is Family.MI_TAIL:
            return integral_mi_tail(params, x, self.qctrl)
        return integral_wi_tail(params, x, self.qctrl)

    def _elementary(self, fn: FunctionId, x: float) -> EvalResult:
        name = fn.name
        if name in _ELEMENTARY_WHICH:
            func, which = _ELEMENTARY_WHICH[name]
            return func(which, x)
        if name in ('gammainc_lower', 'gammainc_upper'):
            return incomplete_gamma(name.split('_')[1], fn.params['a'], x, self.ctrl)
        if name in ('I', 'K'):
            return bessel_mod(name, fn.params['nu'], x)
        if name in ('L0', 'L1'):
            return struve_l(int(name[1]), x, self.ctrl)
        if name == 'laguerre':
            return laguerre_nu(fn.params['nu'], x, self.ctrl)
        raise InvalidParams(f"unknown elementary function {name!r}")

    def try_evaluate(self, fn: FunctionId, x: float) -> Outcome:
        """evaluate(), returning the error instead of raising it"""
        try:
            return self.evaluate(fn, x)
        except SpecialFunctionError as e:
            logger.debug(f"{fn.family.value}{fn.params} at x={x}: {type(e).__name__}: {e}")
            return e

    async def tabulate(self, fn: FunctionId, xs: Sequence[float]) -> List[Outcome]:
        """
        Evaluate fn at every abscissa concurrently

        Returns:
            One EvalResult or SpecialFunctionError per abscissa, in input order
        """
        return list(await asyncio.gather(*(asyncio.to_thread(self.try_evaluate, fn, x) for x in xs)))


@dataclass(frozen=True)
class FigurePreset:
    """A family of curves sharing one grid"""
    name: str
    curves: Tuple[Tuple[str, FunctionId], ...]
    grid: GridSpec


def _curves(family: Family, keys: Tuple[str, ...], values, fixed: Optional[Dict[str, float]] = None):
    curves = []
    for pair in values:
        params = dict(fixed or {})
        params.update(zip(keys, pair))
        label = ";".join(f"{k}={v:g}" for k, v in zip(keys, pair))
        curves.append((label, FunctionId(family, params)))
    return tuple(curves)


_SHAPES = (0.25, 0.5, 1.0, 1.5, 2.0)
_WHITTAKER_GRID = GridSpec(0.1, 10.0, 100)

FIGURE_PRESETS: Dict[str, FigurePreset] = {
    'ei-alpha': FigurePreset(
        'ei-alpha', _curves(Family.IML, ('alpha',), [(a,) for a in _SHAPES], {'beta': 1.0}),
        GridSpec(0.01, 4.0, 100)),
    'ei-beta': FigurePreset(
        'ei-beta', _curves(Family.IML, ('beta',), [(b,) for b in _SHAPES], {'alpha': 1.0}),
        GridSpec(0.01, 4.0, 100)),
    'mi': FigurePreset(
        'mi', _curves(Family.MI, ('kappa', 'mu'), [(0.0, 0.5), (0.5, 0.0), (1.0, 0.5), (1.5, 1.0), (-0.5, 1.0)]),
        _WHITTAKER_GRID),
    'mi-tail': FigurePreset(
        'mi-tail', _curves(Family.MI_TAIL, ('kappa', 'mu'), [(1.0, 0.5), (2.0, 0.5), (1.5, 0.0), (2.5, 1.0)]),
        _WHITTAKER_GRID),
    'wi': FigurePreset(
        'wi', _curves(Family.WI, ('kappa', 'mu'), [(0.5, 0.0), (1.0, 0.5), (2.0, 1.5), (0.0, 0.25)]),
        _WHITTAKER_GRID),
    'wi-tail': FigurePreset(
        'wi-tail', _curves(Family.WI_TAIL, ('kappa', 'mu'), [(0.5, 0.0), (0.0, -0.5), (1.0, 0.5), (2.0, 0.5)]),
        _WHITTAKER_GRID),
}


def figure_preset(name: str, points: Optional[int] = None, spacing: Optional[Spacing] = None) -> FigurePreset:
    """Look up a preset, optionally overriding its grid resolution or spacing"""
    if name not in FIGURE_PRESETS:
        raise InvalidParams(f"unknown figure preset {name!r}; choose from {', '.join(FIGURE_PRESETS)}")
    preset = FIGURE_PRESETS[name]
    if points is None and spacing is None:
        return preset
    grid = GridSpec(preset.grid.x_min, preset.grid.x_max,
                    points if points is not None else preset.grid.points,
                    spacing if spacing is not None else preset.grid.spacing)
    return FigurePreset(preset.name, preset.curves, grid)
