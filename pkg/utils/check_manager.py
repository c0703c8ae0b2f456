"""
Check Manager for specint
Runs fixture comparisons, identity residuals and the transform relation diagnostic
"""
import asyncio
import logging
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, List, Optional, Tuple

from .elementary import lower_gamma, rgamma, trig_integrals
from .errors import InvalidParams, SpecialFunctionError
from .fixtures import REGISTRY, FixtureRegistry, FixtureRow
from .function_manager import FunctionManager
from .laplace import lt_iml, lt_iml_rational, lt_ml, lt_ml_rational, lt_relation_residual
from .mittag_leffler import iml, iml_rational, ml, ml_rational
from .quadrature import integrate, integrate_fi, integrate_singular, laplace_quad
from .schemas import (
    CaseStatus, CheckCase, CheckReport, LTPoint, MLParams, QuadControl, RationalAlpha, WhittakerParams,
    WrightParams,
)
from .whittaker import (
    integral_mi, integral_mi_tail, integral_wi, integral_wi_tail, integrated_recurrence_residual,
    laplace_whittaker_w, whittaker_m, whittaker_recurrence_residual, whittaker_w,
)
from .wright import (
    integral_mainardi, integral_wright, integral_wright_rational, mainardi, mainardi_density_mass,
    mainardi_rational, wright_rational, wright_w,
)

logger = logging.getLogger(__name__)

SUITES = ("tables", "identities", "laplace", "eq19")
# alternative suite names accepted on the command line
SUITE_ALIASES = {"relation": "eq19"}

# Oracle policies for the quadrature cross-checks
_ORACLE = QuadControl(abs_tol=1e-14, rel_tol=1e-12)
_ORACLE_LOOSE = QuadControl(abs_tol=1e-10, rel_tol=1e-9)
_TAIL_SPAN = 120.0

Point = Callable[[], Tuple[float, float]]


@dataclass
class CaseSpec:
    """A named comparison over a handful of points, evaluated lazily"""
    id: str
    reference: str
    tol: float
    points: List[Point] = field(default_factory=list)
    informational: bool = False
    note: Optional[str] = None


def relative_error(computed: float, expected: float) -> float:
    if expected == 0.0:
        return abs(computed)
    return abs(computed - expected) / abs(expected)


def run_case(spec: CaseSpec) -> CheckCase:
    """Evaluate every point of a case and fold them into one result line"""
    worst = 0.0
    try:
        for point in spec.points:
            computed, expected = point()
            err = relative_error(computed, expected)
            if math.isnan(err):
                worst = math.nan
                break
            worst = max(worst, err)
    except SpecialFunctionError as e:
        logger.debug(f"case {spec.id} raised {type(e).__name__}: {e}")
        status = CaseStatus.INFO if spec.informational else CaseStatus.ERROR
        note = f"{type(e).__name__}: {e}"
        if spec.note:
            note = f"{spec.note}; {note}"
        return CheckCase(spec.id, spec.reference, math.nan, spec.tol, status, note)

    if spec.informational:
        status = CaseStatus.INFO
    elif worst <= spec.tol:
        status = CaseStatus.PASS
    else:
        status = CaseStatus.FAIL
    return CheckCase(spec.id, spec.reference, worst, spec.tol, status, spec.note)


# Points: each returns (computed, expected)

def _fixture_point(functions: FunctionManager, row: FixtureRow, x: float) -> Tuple[float, float]:
    return functions.evaluate(row.fn, x).value, row.closed_form(x)


def _lt_vs_quad(params: MLParams, integral: bool, s: float) -> Tuple[float, float]:
    if integral:
        return (lt_iml(params, LTPoint(s)).value,
                laplace_quad(lambda t: iml(params, t).value, s, _ORACLE, growth=1.0, log_scale=1.0).value)
    return (lt_ml(params, LTPoint(s)).value,
            laplace_quad(lambda t: ml(params, t).value, s, _ORACLE, growth=1.0, log_scale=1.0).value)


def _lt_rational_vs_series(p_q: RationalAlpha, beta: float, integral: bool, s: float) -> Tuple[float, float]:
    params = MLParams(p_q.value, beta)
    if integral:
        return lt_iml_rational(p_q, beta, LTPoint(s)).value, lt_iml(params, LTPoint(s)).value
    return lt_ml_rational(p_q, beta, LTPoint(s)).value, lt_ml(params, LTPoint(s)).value


def _laplace_si(s: float) -> Tuple[float, float]:
    value = laplace_quad(lambda t: trig_integrals("Si", t).value, s, _ORACLE_LOOSE, log_scale=math.log(2.0))
    return value.value, math.atan(1.0 / s) / s


def _laplace_ci(s: float) -> Tuple[float, float]:
    value = laplace_quad(lambda t: trig_integrals("Ci", t).value, s, _ORACLE_LOOSE, log_scale=1.0)
    return value.value, -math.log1p(s * s) / (2.0 * s)


def _laplace_w(params: WhittakerParams, closed: Callable[[float], float], s: float) -> Tuple[float, float]:
    return laplace_whittaker_w(params, s).value, closed(s)


def _residual(compute: Callable[..., float], *args) -> Tuple[float, float]:
    return compute(*args), 0.0


def _relation(p_q: RationalAlpha, beta: float, s: float) -> Tuple[float, float]:
    return lt_relation_residual(p_q, beta, LTPoint(s)), 0.0


def _incomplete_gamma_chain(params: WhittakerParams, integral: Callable, x: float) -> Tuple[float, float]:
    kappa = params.kappa
    return integral(params, x).value, 2.0 ** kappa * lower_gamma(kappa, x / 2.0)


def _mainardi_link(alpha: float, x: float) -> Tuple[float, float]:
    return mainardi("F", alpha, x).value, alpha * x * mainardi("M", alpha, x).value


def _mainardi_as_wright(kind: str, alpha: float, x: float) -> Tuple[float, float]:
    beta = 0.0 if kind == "F" else 1.0 - alpha
    return mainardi(kind, alpha, x).value, wright_w(WrightParams(-alpha, beta), -x).value


def _mass(alpha: float) -> Tuple[float, float]:
    return mainardi_density_mass(alpha).value, 1.0


def _ml_reduction(p_q: RationalAlpha, beta: float, integral: bool, x: float) -> Tuple[float, float]:
    params = MLParams(p_q.value, beta)
    if integral:
        return iml_rational(p_q, beta, x).value, iml(params, x).value
    return ml_rational(p_q, beta, x).value, ml(params, x).value


def _wright_reduction(p_q: RationalAlpha, beta: float, integral: bool, x: float) -> Tuple[float, float]:
    params = WrightParams(p_q.value, beta)
    if integral:
        return integral_wright_rational(p_q, beta, x).value, integral_wright(params, x).value
    return wright_rational(p_q, beta, x).value, wright_w(params, x).value


def _mainardi_reduction(kind: str, p_q: RationalAlpha, x: float) -> Tuple[float, float]:
    return mainardi_rational(kind, p_q, x).value, mainardi(kind, p_q.value, x).value


def _iml_vs_quad(params: MLParams, x: float) -> Tuple[float, float]:
    oracle = integrate_fi(lambda t: ml(params, t).value, rgamma(params.beta), x, _ORACLE)
    return iml(params, x).value, oracle.value


def _mi_vs_quad(params: WhittakerParams, x: float) -> Tuple[float, float]:
    oracle = integrate_singular(lambda t: whittaker_m(params, t).value / t, x, params.mu + 0.5, _ORACLE)
    return integral_mi(params, x).value, oracle.value


def _wi_vs_quad(params: WhittakerParams, sigma: float, x: float) -> Tuple[float, float]:
    oracle = integrate_singular(lambda t: whittaker_w(params, t).value / t, x, sigma, _ORACLE)
    return integral_wi(params, x).value, oracle.value


def _tail_vs_quad(params: WhittakerParams, kind: str, x: float) -> Tuple[float, float]:
    base, tail = (whittaker_m, integral_mi_tail) if kind == "M" else (whittaker_w, integral_wi_tail)
    oracle = integrate(lambda t: base(params, t).value / t, x, x + _TAIL_SPAN, _ORACLE,
                       points=[x + 10.0, x + 30.0])
    return tail(params, x).value, oracle.value


def _iwright_vs_quad(params: WrightParams, x: float) -> Tuple[float, float]:
    oracle = integrate_fi(lambda t: wright_w(params, t).value, rgamma(params.beta), x, _ORACLE)
    return integral_wright(params, x).value, oracle.value


def _imainardi_vs_quad(kind: str, p_q: RationalAlpha, x: float) -> Tuple[float, float]:
    alpha = p_q.value
    base = "F" if kind == "Fi" else "M"
    at_zero = 0.0 if base == "F" else rgamma(1.0 - alpha)
    oracle = integrate_fi(lambda t: mainardi(base, alpha, t).value, at_zero, x, _ORACLE)
    return integral_mainardi(kind, p_q, x).value, oracle.value


class CheckManager:
    """
    Builds and runs the check suites
    Cases within a suite are independent and run concurrently; results keep registration order
    """

    def __init__(self, functions: Optional[FunctionManager] = None, registry: FixtureRegistry = REGISTRY):
        """
        Initialize the check manager

        Args:
            functions: dispatcher used for fixture rows
            registry: table fixtures
        """
        self.functions = functions or FunctionManager()
        self.registry = registry

    def _fixture_case(self, row: FixtureRow) -> CaseSpec:
        points = [partial(_fixture_point, self.functions, row, x) for x in row.xs]
        return CaseSpec(row.id, row.reference, row.tol, points, informational=not row.verified, note=row.note)

    def tables_cases(self, include_unverified: bool = False) -> List[CaseSpec]:
        return [self._fixture_case(row) for row in self.registry.suite("tables", include_unverified)]

    def laplace_cases(self, include_unverified: bool = False) -> List[CaseSpec]:
        cases = [self._fixture_case(row) for row in self.registry.suite("laplace", include_unverified)]
        s_grid = (2.0, 3.0, 5.0)

        for alpha, beta in ((1.0, 1.0), (2.0, 1.0), (2.0, 2.0), (3.0, 1.0)):
            params = MLParams(alpha, beta)
            cases.append(CaseSpec(f"lt_ml({alpha:g},{beta:g})~quad", "∫₀^∞ e^{-st}E_{α,β}(t)dt", 1e-6,
                                  [partial(_lt_vs_quad, params, False, s) for s in s_grid]))
            cases.append(CaseSpec(f"lt_iml({alpha:g},{beta:g})~quad", "∫₀^∞ e^{-st}Ei_{α,β}(t)dt", 1e-6,
                                  [partial(_lt_vs_quad, params, True, s) for s in s_grid]))

        for p, q in ((2, 1), (3, 1), (3, 2)):
            p_q = RationalAlpha(p, q)
            for beta in (0.5, 1.0, 2.0):
                points = [partial(_lt_rational_vs_series, p_q, beta, integral, s)
                          for integral in (False, True) for s in (2.0, 5.0)]
                cases.append(CaseSpec(f"lt_rational({p_q},{beta:g})", "rational blocks = series in 1/s", 1e-9,
                                      points))

        cases.append(CaseSpec("laplace(Si)", "L[Si](s) = cot⁻¹(s)/s", 1e-6,
                              [partial(_laplace_si, s) for s in (1.5, 2.0, 4.0)]))
        cases.append(CaseSpec("laplace(Ci)", "L[Ci](s) = -ln(1+s²)/(2s)", 1e-6,
                              [partial(_laplace_ci, s) for s in (1.5, 2.0, 4.0)]))

        whittaker_rows = (
            ((0.0, 0.5), "L[W_{0,1/2}] = 1/(s+1/2)", _shifted_pole),
            ((-0.5, 1.0), "L[W_{-1/2,1}] = √π/√(s+1/2)", _shifted_root),
            ((2.0, 0.5), "L[W_{2,1/2}] = 2/(s+1/2)³ - 2/(s+1/2)²", _shifted_cubic),
        )
        for (kappa, mu), reference, closed in whittaker_rows:
            params = WhittakerParams(kappa, mu)
            cases.append(CaseSpec(f"laplace_w({kappa:g},{mu:g})", reference, 1e-6,
                                  [partial(_laplace_w, params, closed, s) for s in s_grid]))
        return cases

    def relation_cases(self) -> List[CaseSpec]:
        cases = []
        for p, q in ((1, 1), (2, 1), (3, 2)):
            p_q = RationalAlpha(p, q)
            for beta in (0.5, 1.0):
                cases.append(CaseSpec(f"relation({p_q},{beta:g})", "L[Ei] - L[E]/(p^{p/q}s), max |residual|", 0.0,
                                      [partial(_relation, p_q, beta, s) for s in (2.0, 3.0, 4.0)],
                                      informational=True))
        return cases

    def identities_cases(self) -> List[CaseSpec]:
        return (self._whittaker_identities() + self._wright_identities()
                + self._reduction_identities() + self._quadrature_identities())

    def _whittaker_identities(self) -> List[CaseSpec]:
        cases = []
        samples = [(k, m, t) for k in (0.3, 0.7, 1.2, -0.4, 2.1) for m in (0.6, 1.3) for t in (0.5, 3.0)]
        for kind, tol in (("M", 1e-10), ("W", 1e-9)):
            points = [partial(_residual, whittaker_recurrence_residual, kind, WhittakerParams(k, m), t)
                      for k, m, t in samples]
            cases.append(CaseSpec(f"recurrence({kind})", f"contiguous relation of {kind}, {len(samples)} samples",
                                  tol, points))

        points = [partial(_residual, integrated_recurrence_residual, WhittakerParams(k, m), x)
                  for k, m in ((0.3, 0.8), (1.0, 1.5)) for x in (1.0, 3.0)]
        cases.append(CaseSpec("recurrence(Mi)", "integrated contiguous relation of M", 1e-8, points))

        for kappa in (0.5, 1.0, 1.5, 2.0):
            params = WhittakerParams(kappa, kappa - 0.5)
            points = [partial(_incomplete_gamma_chain, params, integral, x)
                      for integral in (integral_mi, integral_wi) for x in (0.5, 2.0, 6.0)]
            cases.append(CaseSpec(f"Mi=Wi({kappa:g})", "Mi_{κ,κ-1/2} = Wi_{κ,κ-1/2} = 2^κγ(κ,x/2)", 1e-11, points))
        return cases

    def _wright_identities(self) -> List[CaseSpec]:
        cases = []
        for alpha in (0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75):
            cases.append(CaseSpec(f"F=axM({alpha:.4g})", "F_α(x) = αx·M_α(x)", 1e-11,
                                  [partial(_mainardi_link, alpha, x) for x in (0.5, 1.0, 2.0, 4.0)]))
        for alpha in (1.0 / 3.0, 0.5, 2.0 / 3.0):
            points = [partial(_mainardi_as_wright, kind, alpha, x) for kind in ("F", "M") for x in (0.5, 1.0, 2.0, 3.0)]
            cases.append(CaseSpec(f"mainardi=wright({alpha:.4g})", "F_α = W_{-α,0}(-x), M_α = W_{-α,1-α}(-x)",
                                  1e-10, points))
        for alpha in (1.0 / 3.0, 0.5):
            cases.append(CaseSpec(f"mass({alpha:.4g})", "∫₀^30 M_α(t)dt = 1", 1e-6, [partial(_mass, alpha)]))
        return cases

    def _reduction_identities(self) -> List[CaseSpec]:
        cases = []
        for p, q in ((1, 2), (3, 2), (2, 3), (2, 1)):
            p_q = RationalAlpha(p, q)
            points = [partial(_ml_reduction, p_q, beta, integral, x)
                      for beta in (0.5, 1.0, 2.0) for integral in (False, True) for x in (0.5, 2.0)]
            cases.append(CaseSpec(f"ml_rational({p_q})", "Mittag-Leffler rational blocks = direct series", 1e-9,
                                  points))
        for p, q in ((1, 2), (3, 2), (1, 3)):
            p_q = RationalAlpha(p, q)
            points = [partial(_wright_reduction, p_q, beta, integral, x)
                      for beta in (1.0, 1.5) for integral in (False, True) for x in (0.5, 2.0)]
            cases.append(CaseSpec(f"wright_rational({p_q})", "Wright rational blocks = direct series", 1e-9, points))
        for p, q in ((1, 3), (1, 2), (2, 3)):
            p_q = RationalAlpha(p, q)
            points = [partial(_mainardi_reduction, kind, p_q, x) for kind in ("F", "M") for x in (0.5, 1.5, 3.0)]
            cases.append(CaseSpec(f"mainardi_rational({p_q})", "Mainardi rational blocks = reflected series", 1e-9,
                                  points))
        return cases

    def _quadrature_identities(self) -> List[CaseSpec]:
        cases = []
        xs = (0.5, 1.0, 2.0)
        for alpha, beta in ((1.0, 1.0), (2.0, 1.0), (0.5, 1.0), (1.5, 0.5)):
            cases.append(CaseSpec(f"iml({alpha:g},{beta:g})~quad", "∫₀^x (E(t) - 1/Γ(β))/t dt", 1e-7,
                                  [partial(_iml_vs_quad, MLParams(alpha, beta), x) for x in xs]))
        for kappa, mu in ((0.0, 0.5), (0.5, 0.0), (1.0, 0.5), (-0.5, 1.0)):
            cases.append(CaseSpec(f"Mi({kappa:g},{mu:g})~quad", "∫₀^x M(t)/t dt", 1e-7,
                                  [partial(_mi_vs_quad, WhittakerParams(kappa, mu), x) for x in xs]))
        # σ is the exponent of W(t) ~ t^σ at the origin
        for kappa, mu, sigma in ((1.0, 0.5, 1.0), (2.0, 1.5, 2.0), (0.25, 0.25, 0.25), (0.0, 0.25, 0.25)):
            cases.append(CaseSpec(f"Wi({kappa:g},{mu:g})~quad", "∫₀^x W(t)/t dt", 1e-7,
                                  [partial(_wi_vs_quad, WhittakerParams(kappa, mu), sigma, x) for x in xs]))
        for kappa, mu in ((1.0, 0.5), (2.0, 0.5), (1.5, 0.0), (0.5, 0.0)):
            cases.append(CaseSpec(f"mi({kappa:g},{mu:g})~quad", "∫_x^{x+120} M(t)/t dt", 1e-7,
                                  [partial(_tail_vs_quad, WhittakerParams(kappa, mu), "M", x) for x in xs]))
        for kappa, mu in ((1.0, 0.5), (0.0, -0.5), (2.0, 0.5), (0.5, 0.0)):
            cases.append(CaseSpec(f"wi({kappa:g},{mu:g})~quad", "∫_x^{x+120} W(t)/t dt", 1e-7,
                                  [partial(_tail_vs_quad, WhittakerParams(kappa, mu), "W", x) for x in xs]))
        for alpha, beta in ((1.0, 1.0), (2.0, 1.0), (0.5, 1.0), (-0.5, 1.0)):
            cases.append(CaseSpec(f"iwright({alpha:g},{beta:g})~quad", "∫₀^x (W(t) - 1/Γ(β))/t dt", 1e-7,
                                  [partial(_iwright_vs_quad, WrightParams(alpha, beta), x) for x in xs]))
        for p, q in ((1, 2), (1, 3), (2, 3), (1, 4)):
            p_q = RationalAlpha(p, q)
            for kind in ("Fi", "Mi"):
                cases.append(CaseSpec(f"{kind}({p_q})~quad", "∫₀^x (f(t) - f(0))/t dt", 1e-7,
                                      [partial(_imainardi_vs_quad, kind, p_q, x) for x in (0.5, 1.0, 1.5)]))
        return cases

    def build(self, suite: str, include_unverified: bool = False) -> List[CaseSpec]:
        """Case list of one suite, or of all of them with ids prefixed by the suite name"""
        suite = SUITE_ALIASES.get(suite, suite)
        if suite == "tables":
            return self.tables_cases(include_unverified)
        if suite == "laplace":
            return self.laplace_cases(include_unverified)
        if suite == "identities":
            return self.identities_cases()
        if suite == "eq19":
            return self.relation_cases()
        if suite == "all":
            cases = []
            for name in SUITES:
                for spec in self.build(name, include_unverified):
                    spec.id = f"{name}/{spec.id}"
                    cases.append(spec)
            return cases
        choices = ', '.join(SUITES + tuple(SUITE_ALIASES) + ('all',))
        raise InvalidParams(f"unknown suite {suite!r}; choose from {choices}")

    async def run(self, suite: str, include_unverified: bool = False) -> CheckReport:
        """
        Run a suite

        Args:
            suite: tables | identities | laplace | eq19 (alias relation) | all
            include_unverified: also evaluate unverified fixture rows, reported as INFO

        Returns:
            CheckReport with one case per registered comparison
        """
        suite = SUITE_ALIASES.get(suite, suite)
        specs = self.build(suite, include_unverified)
        logger.info(f"running {len(specs)} cases of suite {suite}")
        cases = await asyncio.gather(*(asyncio.to_thread(run_case, spec) for spec in specs))
        report = CheckReport(suite, list(cases))
        if report.failures:
            logger.warning(f"{len(report.failures)} of {len(cases)} cases failed in suite {suite}")
        return report


def _shifted_pole(s: float) -> float:
    return 1.0 / (s + 0.5)


def _shifted_root(s: float) -> float:
    return math.sqrt(math.pi / (s + 0.5))


def _shifted_cubic(s: float) -> float:
    return 2.0 / (s + 0.5) ** 3 - 2.0 / (s + 0.5) ** 2
