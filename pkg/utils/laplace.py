"""
Laplace transforms for specint
Transforms of the Mittag-Leffler and integral Mittag-Leffler functions as 1/s series,
their rational-α finite sums, and the residual of the transform relation between them
"""
import logging
import math
from typing import Callable, Dict, Tuple

from .elementary import SQRT_PI, erf, log_gamma, rgamma
from .errors import Divergent, Unsupported
from .hypergeometric import EPS, hyp, pfq, signed_exp, sum_terms
from .mittag_leffler import lookup_row
from .schemas import EvalResult, LTPoint, MLParams, PFQParams, RationalAlpha, SeriesControl, combine

logger = logging.getLogger(__name__)

_SERIES = SeriesControl()


def _require_convergent(alpha: float):
    if alpha < 1:
        raise Divergent(f"the 1/s series has zero radius of convergence for α={alpha} < 1")


def lt_ml(params: MLParams, s: LTPoint, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """L[E_{α,β}](s) = Σ k!/Γ(αk+β)·s^{-k-1}"""
    _require_convergent(params.alpha)
    alpha, beta = params.alpha, params.beta
    log_s = math.log(s.s)
    return sum_terms(
        lambda k: signed_exp(log_gamma(k + 1.0) - log_gamma(alpha * k + beta) - (k + 1) * log_s), ctrl)


def lt_iml(params: MLParams, s: LTPoint, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """L[Ei_{α,β}](s) = Σ k!/Γ(α(k+1)+β)·s^{-k-2}"""
    _require_convergent(params.alpha)
    alpha, beta = params.alpha, params.beta
    log_s = math.log(s.s)
    return sum_terms(
        lambda k: signed_exp(log_gamma(k + 1.0) - log_gamma(alpha * (k + 1) + beta) - (k + 2) * log_s), ctrl)


def _rational_blocks(p_q: RationalAlpha, beta: float, s: float, shift: int,
                     ctrl: SeriesControl) -> EvalResult:
    """
    Σ_{k<q} k! s^{-k-1}/Γ(p(k+shift)/q+β)·_{q+1}F_p(1, (k+1+j)/q; (k+shift)/q + (β+j)/p; q^q/(p^p s^q))
    """
    p, q = p_q.p, p_q.q
    if p < q:
        raise Divergent(f"α={p_q} < 1: the transform series does not converge")
    z = q ** q / (p ** p * s ** q)
    parts = []
    for k in range(q):
        upper = (1.0,) + tuple((k + 1 + j) / q for j in range(q))
        lower = tuple((k + shift) / q + (beta + j) / p for j in range(p))
        coeff = math.factorial(k) * s ** (-k - 1) * rgamma(p * (k + shift) / q + beta)
        parts.append((coeff, pfq(PFQParams(upper, lower, z), ctrl)))
    return combine(*parts)


def lt_ml_rational(p_q: RationalAlpha, beta: float, s: LTPoint, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """L[E_{p/q,β}](s) as a finite sum of _{q+1}F_p functions"""
    return _rational_blocks(p_q, beta, s.s, 0, ctrl)


def lt_iml_rational(p_q: RationalAlpha, beta: float, s: LTPoint, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """L[Ei_{p/q,β}](s) = (1/s)·Σ_{k<q} k! s^{-k-1}/Γ(p(k+1)/q+β)·_{q+1}F_p(...)"""
    return _rational_blocks(p_q, beta, s.s, 1, ctrl).scaled(1.0 / s.s)


def lt_relation_residual(p_q: RationalAlpha, beta: float, s: LTPoint) -> float:
    """
    L[Ei_{p/q,β}](s) - L[E_{p/q,β}](s)/(p^{p/q}·s)

    Diagnostic only: the two sides are evaluated independently and the
    difference is reported, it is not expected to vanish.
    """
    left = lt_iml_rational(p_q, beta, s).value
    right = lt_ml_rational(p_q, beta, s).value / (p_q.p ** p_q.value * s.s)
    residual = left - right
    logger.debug(f"relation residual at p/q={p_q}, β={beta}, s={s.s}: {residual:.6e}")
    return residual


# Closed forms of the transforms

def _lt_ml_integer_alpha(n: int, beta: float, s: float) -> float:
    """(1/s)/Γ(β)·₂F_n(1, 1; (β+j)/n; 1/(n^n s))"""
    lower = [(beta + j) / n for j in range(n)]
    return rgamma(beta) / s * hyp([1.0, 1.0], lower, 1.0 / (n ** n * s))


def _lt_iml_integer_alpha(n: int, beta: float, s: float) -> float:
    """1/(Γ(β+n)s²)·₂F_n(1, 1; 1+(β+j)/n; 1/(n^n s))"""
    lower = [1.0 + (beta + j) / n for j in range(n)]
    return rgamma(beta + n) / (s * s) * hyp([1.0, 1.0], lower, 1.0 / (n ** n * s))


def _lt_iml_three_halves(beta_row: str) -> Callable[[float], float]:
    """Table rows for α = 3/2"""

    def half(s: float) -> float:
        z = 4.0 / (27.0 * s * s)
        return (8.0 / (15.0 * SQRT_PI * s ** 3) * hyp([1.0, 1.0], [7.0 / 6.0, 11.0 / 6.0], z)
                + hyp([0.5, 1.0], [2.0 / 3.0, 4.0 / 3.0], z) / (s * s))

    def one(s: float) -> float:
        z = 4.0 / (27.0 * s * s)
        return (4.0 / (3.0 * SQRT_PI * s * s) * hyp([0.5, 1.0, 1.0], [5.0 / 6.0, 7.0 / 6.0, 1.5], z)
                + hyp([1.0, 1.0, 1.5], [4.0 / 3.0, 5.0 / 3.0, 2.0], z) / (6.0 * s ** 3))

    def three_halves(s: float) -> float:
        z = 4.0 / (27.0 * s * s)
        return (hyp([0.5, 1.0], [4.0 / 3.0, 5.0 / 3.0], z) / (2.0 * s * s)
                + 16.0 / (105.0 * SQRT_PI * s ** 3) * hyp([1.0, 1.0], [11.0 / 6.0, 13.0 / 6.0], z))

    def two(s: float) -> float:
        z = 4.0 / (27.0 * s * s)
        return (8.0 / (15.0 * SQRT_PI * s * s) * hyp([0.5, 1.0, 1.0], [7.0 / 6.0, 1.5, 11.0 / 6.0], z)
                + hyp([1.0, 1.0, 1.5], [5.0 / 3.0, 2.0, 7.0 / 3.0], z) / (24.0 * s ** 3))

    return {"1/2": half, "1": one, "3/2": three_halves, "2": two}[beta_row]


def _lt_iml_one_half(s: float) -> float:
    return 2.0 * math.asin(1.0 / math.sqrt(s)) / (SQRT_PI * s * math.sqrt(s - 1.0))


def _lt_iml_one_three_halves(s: float) -> float:
    return 4.0 / (SQRT_PI * s) * (1.0 - math.sqrt(s - 1.0) * math.asin(1.0 / math.sqrt(s)))


LT_ML_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (1.0, 1.0): lambda s: 1.0 / (s - 1.0),
    (2.0, 2.0): lambda s: (SQRT_PI / math.sqrt(s) * math.exp(1.0 / (4.0 * s))
                           * erf(1.0 / (2.0 * math.sqrt(s))).value),
    (3.0, 1.0): lambda s: hyp([1.0], [1.0 / 3.0, 2.0 / 3.0], 1.0 / (27.0 * s)) / s,
}

LT_IML_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (1.0, 1.0): lambda s: -math.log1p(-1.0 / s) / s,
    (1.0, 0.5): _lt_iml_one_half,
    (1.0, 1.5): _lt_iml_one_three_halves,
    (1.5, 0.5): _lt_iml_three_halves("1/2"),
    (1.5, 1.0): _lt_iml_three_halves("1"),
    (1.5, 1.5): _lt_iml_three_halves("3/2"),
    (1.5, 2.0): _lt_iml_three_halves("2"),
}


def _reference(table: Dict, integer_form: Callable[[int, float, float], float], name: str,
               params: MLParams, s: LTPoint) -> EvalResult:
    func = lookup_row(table, params.alpha, params.beta)
    if func is not None:
        value = func(s.s)
    else:
        n = round(params.alpha)
        if abs(params.alpha - n) > 1e-12 or not 1 <= n <= 5:
            raise Unsupported(f"no closed form registered for {name} at α={params.alpha}, β={params.beta}")
        value = integer_form(n, params.beta, s.s)
    return EvalResult(value, 1e-14 * abs(value) + EPS, 1)


def lt_ml_reference(params: MLParams, s: LTPoint) -> EvalResult:
    """L[E_{α,β}](s) from its tabulated closed form"""
    return _reference(LT_ML_TABLE, _lt_ml_integer_alpha, "L[E]", params, s)


def lt_iml_reference(params: MLParams, s: LTPoint) -> EvalResult:
    """L[Ei_{α,β}](s) from its tabulated closed form"""
    return _reference(LT_IML_TABLE, _lt_iml_integer_alpha, "L[Ei]", params, s)
