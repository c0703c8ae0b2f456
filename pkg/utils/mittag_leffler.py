"""
Mittag-Leffler functions for specint
E_{α,β} and the integral Mittag-Leffler functions Ei_{α,β}, as direct series,
rational-α finite sums of hypergeometric functions, and tabulated closed forms
"""
import logging
import math
from typing import Callable, Dict, Optional, Tuple

from .elementary import EULER, SQRT_PI, log_gamma, dawson, ei, hyp_integrals, rgamma
from .errors import DomainError, InvalidParams, Unsupported
from .hypergeometric import EPS, hyp, pfq, signed_exp, sum_terms
from .schemas import EvalResult, MLParams, PFQParams, RationalAlpha, SeriesControl, combine

logger = logging.getLogger(__name__)

_SERIES = SeriesControl()


def _require_nonnegative(x: float):
    if x < 0:
        raise DomainError(f"Mittag-Leffler functions are evaluated for x >= 0, got {x}")


def ml(params: MLParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    E_{α,β}(x) = Σ x^k/Γ(αk+β)

    Args:
        params: (α, β), both positive
        x: argument, >= 0
        ctrl: convergence policy

    Returns:
        EvalResult
    """
    _require_nonnegative(x)
    alpha, beta = params.alpha, params.beta
    if x == 0:
        return EvalResult(rgamma(beta), EPS * rgamma(beta), 1)
    log_x = math.log(x)
    return sum_terms(lambda k: signed_exp(k * log_x - log_gamma(alpha * k + beta)), ctrl)


def iml(params: MLParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """Ei_{α,β}(x) = Σ_{k>=1} x^k/(k·Γ(αk+β)), zero at the origin"""
    _require_nonnegative(x)
    if x == 0:
        return EvalResult(0.0, 0.0, 0)
    alpha, beta = params.alpha, params.beta
    log_x = math.log(x)
    return sum_terms(
        lambda k: signed_exp(k * log_x - math.log(k) - log_gamma(alpha * k + beta)), ctrl, start=1)


def ml_rational(p_q: RationalAlpha, beta: float, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    E_{p/q,β}(x) as Σ_{k<q} x^k/Γ(pk/q+β)·₁F_p(1; b_j; x^q/p^p), b_j = k/q + (β+j)/p

    Falls back to the direct series when a lower parameter is a pole.
    """
    _require_nonnegative(x)
    p, q = p_q.p, p_q.q
    params = MLParams(p_q.value, beta)
    if x == 0:
        return ml(params, x, ctrl)
    z = x ** q / p ** p
    parts = []
    try:
        for k in range(q):
            lower = tuple(k / q + (beta + j) / p for j in range(p))
            parts.append((x ** k * rgamma(p * k / q + beta), pfq(PFQParams((1.0,), lower, z), ctrl)))
    except InvalidParams as e:
        logger.debug(f"ml_rational({p_q}, {beta}): {e}; using the direct series")
        return ml(params, x, ctrl)
    return combine(*parts)


def iml_rational(p_q: RationalAlpha, beta: float, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Ei_{p/q,β}(x) as Σ_{k=1}^{q} x^k/(kΓ(pk/q+β))·₂F_{p+1}(1, k/q; b_j, k/q+1; x^q/p^p)
    """
    _require_nonnegative(x)
    p, q = p_q.p, p_q.q
    params = MLParams(p_q.value, beta)
    if x == 0:
        return EvalResult(0.0, 0.0, 0)
    z = x ** q / p ** p
    parts = []
    try:
        for k in range(1, q + 1):
            lower = tuple(k / q + (beta + j) / p for j in range(p)) + (k / q + 1.0,)
            coeff = x ** k / k * rgamma(p * k / q + beta)
            parts.append((coeff, pfq(PFQParams((1.0, k / q), lower, z), ctrl)))
    except InvalidParams as e:
        logger.debug(f"iml_rational({p_q}, {beta}): {e}; using the direct series")
        return iml(params, x, ctrl)
    return combine(*parts)


# Closed forms of the integral Mittag-Leffler function

def _chi(x: float) -> float:
    return hyp_integrals("Chi", x).value


def _shi(x: float) -> float:
    return hyp_integrals("Shi", x).value


def _iml_integer_alpha(n: int, beta: float, x: float) -> float:
    """x/Γ(β+n)·₂F_{n+1}(1, 1; 2, 1+(β+j)/n; x/n^n)"""
    lower = [2.0] + [1.0 + (beta + j) / n for j in range(n)]
    return x * rgamma(beta + n) * hyp([1.0, 1.0], lower, x / n ** n)


def _iml_half_alpha(beta: float, x: float) -> float:
    """Even and odd halves of Ei_{1/2,β}"""
    y = x * x
    even = y / 2.0 * rgamma(beta + 1.0) * hyp([1.0, 1.0], [2.0, beta + 1.0], y)
    odd = x * rgamma(beta + 0.5) * hyp([0.5, 1.0], [1.5, beta + 0.5], y)
    return even + odd


def _iml_third_alpha(beta: float, x: float) -> float:
    """Three ₂F₂ blocks of Ei_{1/3,β}"""
    total = 0.0
    for k in (1, 2, 3):
        c = k / 3.0
        total += x ** k / k * rgamma(c + beta) * hyp([1.0, c], [c + beta, c + 1.0], x ** 3)
    return total


def _iml_half_half(x: float) -> float:
    return x * x / SQRT_PI * hyp([1.0, 1.0], [1.5, 2.0], x * x) + math.exp(x * x) * dawson(x).value


def _iml_half_one(x: float) -> float:
    y = x * x
    return -EULER / 2.0 - math.log(x) + ei(y).value / 2.0 + 2.0 * x / SQRT_PI * hyp([0.5, 1.0], [1.5, 1.5], y)


def _iml_half_two(x: float) -> float:
    y = x * x
    even = 0.5 * (1.0 - EULER + ei(y).value + (1.0 - math.exp(y)) / y) - math.log(x)
    return even + 4.0 * x / (3.0 * SQRT_PI) * hyp([0.5, 1.0], [1.5, 2.5], y)


def _iml_half_three(x: float) -> float:
    y = x * x
    even = (2.0 + 4.0 * y + (3.0 - 2.0 * EULER) * y * y - 2.0 * math.exp(y) * (1.0 + y)
            + 2.0 * y * y * (ei(y).value - math.log(y))) / (8.0 * y * y)
    return even + 8.0 * x / (15.0 * SQRT_PI) * hyp([0.5, 1.0], [1.5, 3.5], y)


def _iml_half_four(x: float) -> float:
    y = x * x
    even = (12.0 + 18.0 * y * (1.0 + y) + (11.0 - 6.0 * EULER) * y ** 3
            - 6.0 * math.exp(y) * (2.0 + y + y * y) + 6.0 * y ** 3 * (ei(y).value - math.log(y))) / (72.0 * y ** 3)
    return even + 16.0 * x / (105.0 * SQRT_PI) * hyp([0.5, 1.0], [1.5, 4.5], y)


def _iml_third_half(x: float) -> float:
    x3 = x ** 3
    return (2.0 * x3 / (3.0 * SQRT_PI) * hyp([1.0, 1.0], [1.5, 2.0], x3)
            + x * rgamma(5.0 / 6.0) * hyp([1.0, 1.0 / 3.0], [5.0 / 6.0, 4.0 / 3.0], x3)
            + 3.0 * x * x * rgamma(1.0 / 6.0) * hyp([1.0, 2.0 / 3.0], [7.0 / 6.0, 5.0 / 3.0], x3))


def _iml_third_three_halves(x: float) -> float:
    x3 = x ** 3
    return (x * rgamma(11.0 / 6.0) * hyp([1.0, 1.0 / 3.0], [4.0 / 3.0, 11.0 / 6.0], x3)
            + 18.0 * x * x / 7.0 * rgamma(1.0 / 6.0) * hyp([1.0, 2.0 / 3.0], [5.0 / 3.0, 13.0 / 6.0], x3)
            + 4.0 * x3 / (9.0 * SQRT_PI) * hyp([1.0, 1.0], [2.0, 2.5], x3))


def _iml_three_halves(beta_row: str) -> Callable[[float], float]:
    """Table rows for α = 3/2"""

    def half(x: float) -> float:
        z = x * x / 27.0
        return (4.0 * x * x / (15.0 * SQRT_PI) * hyp([1.0, 1.0], [7.0 / 6.0, 1.5, 11.0 / 6.0, 2.0], z)
                + x * hyp([0.5], [2.0 / 3.0, 4.0 / 3.0, 1.5], z))

    def one(x: float) -> float:
        z = x * x / 27.0
        return (4.0 * x / (3.0 * SQRT_PI) * hyp([0.5, 1.0], [5.0 / 6.0, 7.0 / 6.0, 1.5, 1.5], z)
                + x * x / 12.0 * hyp([1.0, 1.0], [4.0 / 3.0, 5.0 / 3.0, 2.0, 2.0], z))

    def three_halves(x: float) -> float:
        z = x * x / 27.0
        return (x / 2.0 * hyp([0.5], [4.0 / 3.0, 1.5, 5.0 / 3.0], z)
                + 8.0 * x * x / (105.0 * SQRT_PI) * hyp([1.0, 1.0], [1.5, 11.0 / 6.0, 2.0, 13.0 / 6.0], z))

    def two(x: float) -> float:
        z = x * x / 27.0
        return (8.0 * x / (15.0 * SQRT_PI) * hyp([0.5, 1.0], [7.0 / 6.0, 1.5, 1.5, 11.0 / 6.0], z)
                + x * x / 48.0 * hyp([1.0, 1.0], [5.0 / 3.0, 2.0, 2.0, 7.0 / 3.0], z))

    return {"1/2": half, "1": one, "3/2": three_halves, "2": two}[beta_row]


# Rows with a closed form of their own; (α, β) -> f(x)
IML_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (1.0 / 3.0, 0.5): _iml_third_half,
    (1.0 / 3.0, 1.5): _iml_third_three_halves,
    (0.5, 0.5): _iml_half_half,
    (0.5, 1.0): _iml_half_one,
    (0.5, 2.0): _iml_half_two,
    (0.5, 3.0): _iml_half_three,
    (0.5, 4.0): _iml_half_four,
    (1.0, 1.0): lambda x: -EULER - math.log(x) + _chi(x) + _shi(x),
    (1.0, 0.5): lambda x: 2.0 * x / SQRT_PI * hyp([1.0, 1.0], [1.5, 2.0], x),
    (1.0, 1.5): lambda x: 4.0 * x / (3.0 * SQRT_PI) * hyp([1.0, 1.0], [2.5, 2.0], x),
    (1.5, 0.5): _iml_three_halves("1/2"),
    (1.5, 1.0): _iml_three_halves("1"),
    (1.5, 1.5): _iml_three_halves("3/2"),
    (1.5, 2.0): _iml_three_halves("2"),
    (2.0, 1.0): lambda x: -2.0 * EULER - math.log(x) + 2.0 * _chi(math.sqrt(x)),
    (2.0, 2.0): lambda x: (2.0 - 2.0 * EULER - math.log(x) - 2.0 * math.sinh(math.sqrt(x)) / math.sqrt(x)
                           + 2.0 * _chi(math.sqrt(x))),
}

# Rows given for arbitrary β; α -> f(β, x)
IML_GENERIC: Dict[float, Callable[[float, float], float]] = {
    1.0 / 3.0: _iml_third_alpha,
    0.5: _iml_half_alpha,
    1.0: lambda beta, x: _iml_integer_alpha(1, beta, x),
    2.0: lambda beta, x: _iml_integer_alpha(2, beta, x),
    3.0: lambda beta, x: _iml_integer_alpha(3, beta, x),
    4.0: lambda beta, x: _iml_integer_alpha(4, beta, x),
    5.0: lambda beta, x: _iml_integer_alpha(5, beta, x),
}


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= 1e-12 * max(1.0, abs(b))


def lookup_row(table: Dict, *key: float) -> Optional[Callable]:
    """Registry entry whose key matches to 1e-12"""
    for row, func in table.items():
        row = row if isinstance(row, tuple) else (row,)
        if len(row) == len(key) and all(_close(a, b) for a, b in zip(key, row)):
            return func
    return None


def iml_reference(params: MLParams, x: float) -> EvalResult:
    """
    Ei_{α,β}(x) from its tabulated closed form

    Raises:
        Unsupported: (α, β) has no registered row
    """
    if not x > 0:
        raise DomainError(f"iml_reference needs x > 0, got {x}")
    func = lookup_row(IML_TABLE, params.alpha, params.beta)
    if func is not None:
        value = func(x)
    else:
        generic = lookup_row(IML_GENERIC, params.alpha)
        if generic is None:
            raise Unsupported(f"no closed form registered for Ei_{{{params.alpha},{params.beta}}}")
        value = generic(params.beta, x)
    return EvalResult(value, 1e-14 * abs(value), 1)
