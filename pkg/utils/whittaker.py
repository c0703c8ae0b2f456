"""
Whittaker functions for specint
M and W functions, the integral Whittaker functions Mi, mi, Wi, wi and their tabulated closed forms
"""
import logging
import math
from dataclasses import replace
from typing import Callable, Dict, Optional, Tuple

from .elementary import (SQRT_PI, bessel_k, e1, erf, erfc, erfi, gamma, hyp_integrals, laguerre_nu, lower_gamma,
                         rgamma)
from .errors import DivergentIntegral, DomainError, InvalidParams, NoConvergence, PoleError, Unsupported
from .hypergeometric import EPS, SeriesAccumulator, gauss_2f1_sequence, hyp, pfq
from .mittag_leffler import lookup_row
from .quadrature import integrate, integrate_decaying, integrate_singular, laplace_quad
from .schemas import EvalResult, PFQParams, QuadControl, SeriesControl, WhittakerParams, combine

logger = logging.getLogger(__name__)

_SERIES = SeriesControl()
_QUAD = QuadControl()

PERTURBATION = 1e-6
MI_SERIES_CAP = 400
MI_SERIES_LIMIT = 40.0
WI_SERIES_LIMIT = 20.0
W_SERIES_LIMIT = 4.0

# U(a, b, x) integrals are taken relative to the value, not absolutely
_U_QUAD = QuadControl(abs_tol=1e-300, rel_tol=1e-12)


def _require_positive(x: float, name: str):
    if not x > 0:
        raise DomainError(f"{name} needs x > 0, got {x}")


def _is_nonpositive_int(v: float) -> bool:
    return v <= 0 and abs(v - round(v)) < 1e-14


def _is_integer(v: float) -> bool:
    return abs(v - round(v)) < 1e-12


def _perturbed(func: Callable[[float], EvalResult], mu: float) -> EvalResult:
    """Average of func(μ-δ) and func(μ+δ), for the logarithmic case 2μ ∈ ℤ"""
    lo = func(mu - PERTURBATION)
    hi = func(mu + PERTURBATION)
    value = 0.5 * (lo.value + hi.value)
    error = max(lo.est_error, hi.est_error) + 0.5 * abs(hi.value - lo.value) * PERTURBATION + 1e-7 * abs(value)
    return EvalResult(value, error, lo.work + hi.work)


def _scaled_quad(qctrl: QuadControl, log_size: float) -> QuadControl:
    """Shrink abs_tol for integrals whose size is about e^{log_size}"""
    if log_size >= 0:
        return qctrl
    return replace(qctrl, abs_tol=max(qctrl.abs_tol * math.exp(log_size), 1e-300))


# M and W

def whittaker_m(params: WhittakerParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    M_{κ,μ}(x) = x^{μ+1/2}e^{-x/2}₁F₁(μ-κ+1/2; 1+2μ; x)

    Args:
        params: (κ, μ) with 1+2μ not a non-positive integer
        x: argument, > 0
        ctrl: series policy

    Returns:
        EvalResult
    """
    _require_positive(x, "whittaker_m")
    params.require_m_series()
    kappa, mu = params.kappa, params.mu
    series = pfq(PFQParams((mu - kappa + 0.5,), (1.0 + 2.0 * mu,), x), ctrl)
    return series.scaled(math.exp((mu + 0.5) * math.log(x) - 0.5 * x))


def _terminating_degree(kappa: float, mu: float) -> Optional[int]:
    """N when a = 1/2+μ-κ or b = 1/2-μ-κ is -N, else None"""
    degrees = [int(round(-v)) for v in (0.5 + mu - kappa, 0.5 - mu - kappa) if _is_nonpositive_int(v)]
    return min(degrees) if degrees else None


def _asymptotic_coefficients(kappa: float, mu: float, n_max: int):
    """d_n = (a)_n(b)_n(-1)^n/n! for n = 0..n_max"""
    a, b = 0.5 + mu - kappa, 0.5 - mu - kappa
    coeffs = [1.0]
    for n in range(n_max):
        coeffs.append(-coeffs[-1] * (a + n) * (b + n) / (n + 1))
    return coeffs


def _w_terminating(kappa: float, mu: float, n_max: int, x: float) -> EvalResult:
    """W_{κ,μ}(x) = e^{-x/2}x^κ Σ_{n<=N} d_n x^{-n}, exact when a or b is -N"""
    acc = SeriesAccumulator(_SERIES)
    for n, d in enumerate(_asymptotic_coefficients(kappa, mu, n_max)):
        acc.add(d * x ** -n)
    return acc.result(exact=True).scaled(math.exp(kappa * math.log(x) - 0.5 * x))


def _w_reflection(kappa: float, mu: float, x: float, ctrl: SeriesControl) -> EvalResult:
    """Γ(-2μ)/Γ(1/2-κ-μ)·M_{κ,μ} + Γ(2μ)/Γ(1/2-κ+μ)·M_{κ,-μ}"""
    try:
        first = gamma(-2.0 * mu) * rgamma(0.5 - kappa - mu)
        second = gamma(2.0 * mu) * rgamma(0.5 - kappa + mu)
        m_plus = whittaker_m(WhittakerParams(kappa, mu), x, ctrl) if first else EvalResult(0.0)
        m_minus = whittaker_m(WhittakerParams(kappa, -mu), x, ctrl) if second else EvalResult(0.0)
    except PoleError as e:
        raise InvalidParams(f"W_{{{kappa},{mu}}}: gamma prefactors cannot be regularized ({e})")
    return combine((first, m_plus), (second, m_minus))


def _u_integral(a: float, b: float, x: float) -> EvalResult:
    """
    U(a, b, x) = (1/Γ(a))∫₀^∞ e^{-xt}t^{a-1}(1+t)^{b-a-1} dt for a > 0

    [0, 1] is taken in u = t^a, [1, ∞) in v = t-1 with the e^{-x} factor pulled out.
    """
    c = b - a - 1.0
    inv = 1.0 / a

    def head(u: float) -> float:
        t = u ** inv
        return math.exp(-x * t) * (1.0 + t) ** c

    def tail(v: float) -> float:
        return math.exp(-x * v) * (1.0 + v) ** (a - 1.0) * (2.0 + v) ** c

    def tail_bound(v: float) -> float:
        return (-x * v + max(a - 1.0, 0.0) * math.log1p(v)
                + max(c, 0.0) * math.log(2.0 + v) + min(c, 0.0) * math.log(2.0))

    near = integrate(head, 0.0, 1.0, _U_QUAD).scaled(inv)
    far = integrate_decaying(tail, 0.0, tail_bound, _U_QUAD, log_scale=tail_bound(0.0)).scaled(math.exp(-x))
    return combine((rgamma(a), near), (rgamma(a), far))


def kummer_u(a: float, b: float, x: float) -> EvalResult:
    """
    Tricomi U(a, b, x) for x > 0

    For a <= 0 starts at a+n > 0 and recurs downward:
    U(a-1) = (2a-b+x)U(a) - a(a-b+1)U(a+1)
    """
    _require_positive(x, "kummer_u")
    if a > 0:
        return _u_integral(a, b, x)
    n = int(math.floor(-a)) + 1
    top = a + n
    upper = _u_integral(top + 1.0, b, x)
    current = _u_integral(top, b, x)
    work = upper.work + current.work
    rel_err = max(upper.est_error / max(abs(upper.value), 1e-300),
                  current.est_error / max(abs(current.value), 1e-300))
    u_next, u_cur = upper.value, current.value
    for k in range(n):
        ak = top - k
        u_next, u_cur = u_cur, (2.0 * ak - b + x) * u_cur - ak * (ak - b + 1.0) * u_next
    return EvalResult(u_cur, abs(u_cur) * (rel_err + EPS * (n + 1)), work)


def whittaker_w(params: WhittakerParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    W_{κ,μ}(x), even in μ

    Exact forms first: W_{κ,κ-1/2} = x^κe^{-x/2}, W_{0,μ} = √(x/π)K_μ(x/2) and the
    terminating asymptotic sum when 1/2±μ-κ is a non-positive integer. Otherwise the
    M reflection for x <= 4 (perturbed when 2μ ∈ ℤ) and x^{μ+1/2}e^{-x/2}U(1/2+μ-κ, 1+2μ, x) beyond.

    Args:
        params: (κ, μ)
        x: argument, > 0
        ctrl: series policy

    Returns:
        EvalResult
    """
    _require_positive(x, "whittaker_w")
    kappa, mu = params.kappa, abs(params.mu)

    if abs(mu - abs(kappa - 0.5)) < 1e-14:
        value = math.exp(kappa * math.log(x) - 0.5 * x)
        return EvalResult(value, EPS * abs(value), 1)
    if kappa == 0:
        return bessel_k(mu, x / 2.0, ctrl).scaled(math.sqrt(x / math.pi))
    n_max = _terminating_degree(kappa, mu)
    if n_max is not None:
        return _w_terminating(kappa, mu, n_max, x)

    if x <= W_SERIES_LIMIT:
        if _is_integer(2.0 * mu):
            logger.debug(f"W_{{{kappa},{mu}}}({x}): 2μ is an integer, perturbing by ±{PERTURBATION}")
            return _perturbed(lambda m: _w_reflection(kappa, m, x, ctrl), mu)
        return _w_reflection(kappa, mu, x, ctrl)

    u = kummer_u(0.5 + mu - kappa, 1.0 + 2.0 * mu, x)
    return u.scaled(math.exp((mu + 0.5) * math.log(x) - 0.5 * x))


# Integral Whittaker functions

def integral_mi(params: WhittakerParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Mi_{κ,μ}(x) = ∫₀^x M_{κ,μ}(t)/t dt

    x^{μ+1/2}Σ ₂F₁(-n, μ-κ+1/2; 1+2μ; 2)(-x/2)^n/(n!(μ+1/2+n)), with the
    coefficients from the Gauss recurrence in n; quadrature beyond x = 40.
    """
    _require_positive(x, "integral_mi")
    params.require_m_series()
    params.require_integrable()
    kappa, mu = params.kappa, params.mu
    sigma = mu + 0.5

    if x > MI_SERIES_LIMIT:
        logger.debug(f"Mi_{{{kappa},{mu}}}({x}): beyond the alternating series range, using quadrature")
        return integrate_singular(lambda t: whittaker_m(params, t, ctrl).value / t, x, sigma, _QUAD)

    coeffs = gauss_2f1_sequence(mu - kappa + 0.5, 1.0 + 2.0 * mu, 2.0, MI_SERIES_CAP)
    acc = SeriesAccumulator(ctrl)
    power = 1.0
    for n, c_n in enumerate(coeffs):
        if n:
            power *= -0.5 * x / n
        if acc.push(c_n * power / (sigma + n)):
            return acc.result().scaled(x ** sigma)
    raise NoConvergence(f"Mi_{{{kappa},{mu}}}({x}) not settled after {MI_SERIES_CAP} terms")


def _mi_half_kappa(kappa: float, mu: float, x: float) -> float:
    """Mi_{±1/2,μ} as two ₁F₂ terms, minus sign for κ = +1/2"""
    y = x * x / 16.0
    sign = -1.0 if kappa > 0 else 1.0
    first = hyp([mu / 2.0 + 0.25], [mu + 0.5, mu / 2.0 + 1.25], y)
    second = hyp([mu / 2.0 + 0.75], [mu + 1.5, mu / 2.0 + 1.75], y)
    return x ** (mu + 0.5) / (mu + 0.5) * (first + sign * (x / 2.0) / (2.0 * mu + 3.0) * second)


def integral_mi_reference(params: WhittakerParams, x: float) -> EvalResult:
    """
    Mi_{κ,μ}(x) from closed forms

    κ = μ+1/2 gives 2^κγ(κ, x/2); κ = 0 and κ = ±1/2 reduce to ₁F₂ functions of x²/16.

    Raises:
        Unsupported: any other κ
    """
    _require_positive(x, "integral_mi_reference")
    params.require_integrable()
    kappa, mu = params.kappa, params.mu
    if abs(kappa - mu - 0.5) < 1e-14:
        value = 2.0 ** kappa * lower_gamma(kappa, x / 2.0)
    elif kappa == 0:
        value = x ** (mu + 0.5) / (mu + 0.5) * hyp([(2.0 * mu + 1.0) / 4.0],
                                                   [mu + 1.0, (2.0 * mu + 5.0) / 4.0], x * x / 16.0)
    elif abs(kappa) == 0.5:
        value = _mi_half_kappa(kappa, mu, x)
    else:
        raise Unsupported(f"no closed form for Mi_{{{kappa},{mu}}}")
    return EvalResult(value, 1e-14 * abs(value) + EPS, 1)


def _mi_any(kappa: float, mu: float, x: float, ctrl: SeriesControl) -> EvalResult:
    params = WhittakerParams(kappa, mu)
    if kappa == 0 or abs(kappa) == 0.5:
        return integral_mi_reference(params, x)
    return integral_mi(params, x, ctrl)


def _wi_reflection(kappa: float, mu: float, x: float, ctrl: SeriesControl) -> EvalResult:
    """Γ(-2μ)/Γ(1/2-κ-μ)·Mi_{κ,μ} + Γ(2μ)/Γ(1/2-κ+μ)·Mi_{κ,-μ}, |μ| < 1/2"""
    first = gamma(-2.0 * mu) * rgamma(0.5 - kappa - mu)
    second = gamma(2.0 * mu) * rgamma(0.5 - kappa + mu)
    parts = []
    if first:
        parts.append((first, _mi_any(kappa, mu, x, ctrl)))
    if second:
        parts.append((second, _mi_any(kappa, -mu, x, ctrl)))
    return combine(*parts) if parts else EvalResult(0.0)


def _wi_terminating(kappa: float, mu: float, n_max: int, x: float) -> EvalResult:
    """Σ d_n 2^{κ-n}γ(κ-n, x/2) for the terminating W"""
    if not kappa - n_max > 0:
        raise DivergentIntegral(f"Wi_{{{kappa},{mu}}}: W/t is not integrable at the origin")
    acc = SeriesAccumulator(_SERIES)
    for n, d in enumerate(_asymptotic_coefficients(kappa, mu, n_max)):
        acc.add(d * 2.0 ** (kappa - n) * lower_gamma(kappa - n, x / 2.0))
    return acc.result(exact=True)


def _wi_small(kappa: float, mu: float, x: float, ctrl: SeriesControl) -> EvalResult:
    if mu >= 0.5:
        raise DivergentIntegral(f"Wi_{{{kappa},{mu}}}: W ~ x^{{1/2-μ}} makes W/t non-integrable at 0")
    if mu == 0:
        # the reflection is even in μ
        res = _wi_reflection(kappa, PERTURBATION, x, ctrl)
        return EvalResult(res.value, res.est_error + 1e-7 * abs(res.value), res.work)
    return _wi_reflection(kappa, mu, x, ctrl)


def integral_wi(params: WhittakerParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Wi_{κ,μ}(x) = ∫₀^x W_{κ,μ}(t)/t dt

    Args:
        params: (κ, μ); the integral exists for |μ| < 1/2 or when W terminates with κ-N > 0
        x: upper limit, > 0
        ctrl: series policy

    Returns:
        EvalResult

    Raises:
        DivergentIntegral: W/t is not integrable at the origin
    """
    _require_positive(x, "integral_wi")
    kappa, mu = params.kappa, abs(params.mu)

    if abs(mu - abs(kappa - 0.5)) < 1e-14:
        if not kappa > 0:
            raise DivergentIntegral(f"Wi_{{{kappa},{mu}}}: t^{{κ-1}} is not integrable at the origin")
        value = 2.0 ** kappa * lower_gamma(kappa, x / 2.0)
        return EvalResult(value, 1e-14 * abs(value), 1)
    n_max = _terminating_degree(kappa, mu)
    if n_max is not None:
        return _wi_terminating(kappa, mu, n_max, x)

    if x <= WI_SERIES_LIMIT:
        return _wi_small(kappa, mu, x, ctrl)
    head = _wi_small(kappa, mu, WI_SERIES_LIMIT, ctrl)
    body = integrate(lambda t: whittaker_w(params, t, ctrl).value / t, WI_SERIES_LIMIT, x,
                     _scaled_quad(_QUAD, -0.5 * WI_SERIES_LIMIT))
    return combine((1.0, head), (1.0, body))


def _mi_tail_degree(params: WhittakerParams) -> int:
    n = params.kappa - params.mu - 0.5
    if n < -1e-14 or not _is_integer(n):
        raise DivergentIntegral(
            f"mi_{{{params.kappa},{params.mu}}}: κ-μ-1/2={n:g} is not a non-negative integer, M grows like e^{{t/2}}")
    return int(round(n))


def integral_mi_tail(params: WhittakerParams, x: float, qctrl: QuadControl = _QUAD) -> EvalResult:
    """
    mi_{κ,μ}(x) = ∫_x^∞ M_{κ,μ}(t)/t dt, convergent when κ-μ-1/2 = n ∈ ℕ₀

    The ₁F₁ is then a degree-n polynomial and |M/t| <= C t^{μ-1/2+n}e^{-t/2} for t >= 1.
    """
    _require_positive(x, "integral_mi_tail")
    params.require_m_series()
    n = _mi_tail_degree(params)
    c = 1.0 + 2.0 * params.mu
    coeff, total = 1.0, 1.0
    for k in range(n):
        coeff *= (-n + k) / ((c + k) * (k + 1))
        total += abs(coeff)
    log_c = math.log(total)

    def bound(t: float) -> float:
        return log_c + (params.mu - 0.5) * math.log(t) + n * max(math.log(t), 0.0) - 0.5 * t

    start = bound(x)
    return integrate_decaying(lambda t: whittaker_m(params, t).value / t, x, bound,
                              _scaled_quad(qctrl, start), log_scale=start)


def integral_wi_tail(params: WhittakerParams, x: float, qctrl: QuadControl = _QUAD) -> EvalResult:
    """wi_{κ,μ}(x) = ∫_x^∞ W_{κ,μ}(t)/t dt, with the t^{κ-1}e^{-t/2} envelope"""
    _require_positive(x, "integral_wi_tail")
    kappa, mu = params.kappa, params.mu
    spread = abs((0.5 + mu - kappa) * (0.5 - mu - kappa))

    def bound(t: float) -> float:
        return (kappa - 1.0) * math.log(t) - 0.5 * t + math.log(2.0) + math.log1p(spread / t)

    start = max(bound(x), math.log(abs(whittaker_w(params, x).value) / x + 1e-300))
    return integrate_decaying(lambda t: whittaker_w(params, t).value / t, x, bound,
                              _scaled_quad(qctrl, start), log_scale=start)


# Laplace transform and recurrences

def laplace_whittaker_w(params: WhittakerParams, s: float, qctrl: QuadControl = _QUAD) -> EvalResult:
    """
    ∫₀^∞ e^{-st}W_{κ,μ}(t) dt for s > 0, |μ| < 3/2

    Raises:
        DivergentIntegral: W ~ t^{1/2-|μ|} is not integrable at the origin
    """
    if not abs(params.mu) < 1.5:
        raise DivergentIntegral(f"W_{{{params.kappa},{params.mu}}} is not integrable at the origin")
    scale = math.log(abs(whittaker_w(params, 1.0).value) + 1.0) + 1.0
    return laplace_quad(lambda t: whittaker_w(params, t).value, s, qctrl,
                        growth=-0.5, log_scale=scale, power=max(params.kappa, 0.0))


def whittaker_recurrence_residual(kind: str, params: WhittakerParams, t: float) -> float:
    """
    Relative residual of the contiguous relations

    M: 2μ[M_{κ-1/2,μ-1/2} - M_{κ+1/2,μ-1/2}] = √t·M_{κ,μ}
    W: (κ+μ)W_{κ-1/2,μ} + W_{κ+1/2,μ} = √t·W_{κ,μ+1/2}
    """
    kappa, mu = params.kappa, params.mu
    if kind == "M":
        left = 2.0 * mu * (whittaker_m(WhittakerParams(kappa - 0.5, mu - 0.5), t).value
                           - whittaker_m(WhittakerParams(kappa + 0.5, mu - 0.5), t).value)
        right = math.sqrt(t) * whittaker_m(params, t).value
    elif kind == "W":
        left = ((kappa + mu) * whittaker_w(WhittakerParams(kappa - 0.5, mu), t).value
                + whittaker_w(WhittakerParams(kappa + 0.5, mu), t).value)
        right = math.sqrt(t) * whittaker_w(WhittakerParams(kappa, mu + 0.5), t).value
    else:
        raise InvalidParams(f"unknown recurrence {kind!r}, expected M or W")
    return abs(left - right) / max(abs(left), abs(right), 1e-300)


def integrated_recurrence_residual(params: WhittakerParams, x: float) -> float:
    """
    Relative residual of ∫₀^x M_{κ,μ}(t)t^{-1/2}dt = 2μ[Mi_{κ-1/2,μ-1/2}(x) - Mi_{κ+1/2,μ-1/2}(x)]

    Left side by quadrature, needs μ > 0.
    """
    kappa, mu = params.kappa, params.mu
    if not mu > 0:
        raise InvalidParams(f"integrated recurrence needs μ > 0, got {mu}")
    left = integrate_singular(lambda t: whittaker_m(params, t).value / math.sqrt(t), x, mu + 1.0,
                              QuadControl(abs_tol=1e-14, rel_tol=1e-12)).value
    right = 2.0 * mu * (integral_mi(WhittakerParams(kappa - 0.5, mu - 0.5), x).value
                        - integral_mi(WhittakerParams(kappa + 0.5, mu - 0.5), x).value)
    return abs(left - right) / max(abs(left), abs(right), 1e-300)


# Tabulated closed forms, keyed by (κ, μ)

def _half_exp(x: float) -> float:
    return math.exp(-x / 2.0)


M_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (0.0, 0.5): lambda x: 2.0 * math.sinh(x / 2.0),
    (0.5, 0.0): lambda x: math.sqrt(x) * _half_exp(x),
    (-0.25, 0.0): lambda x: _half_exp(x) * math.sqrt(x) * laguerre_nu(-0.75, x).value,
    (-0.25, 0.25): lambda x: SQRT_PI / 2.0 * math.exp(x / 2.0) * x ** 0.25 * erf(math.sqrt(x)).value,
}

W_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (0.0, 0.5): _half_exp,
    (-0.5, 0.0): lambda x: math.sqrt(x) * math.exp(x / 2.0) * e1(x).value,
    (0.0, 1.5): lambda x: _half_exp(x) * (1.0 + 2.0 / x),
    (-0.5, 1.0): lambda x: _half_exp(x) / math.sqrt(x),
    (2.0, 0.5): lambda x: x * (x - 2.0) * _half_exp(x),
    (4.0, 0.5): lambda x: _half_exp(x) * x * (x ** 3 - 12.0 * x * x + 36.0 * x - 24.0),
    (4.0, 1.5): lambda x: _half_exp(x) * x * x * (x * x - 10.0 * x + 20.0),
    (1.5, 0.0): lambda x: _half_exp(x) * (x ** 1.5 - math.sqrt(x)),
}

MI_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (0.0, 0.5): lambda x: 2.0 * hyp_integrals("Shi", x / 2.0).value,
    (0.5, 0.0): lambda x: math.sqrt(2.0 * math.pi) * erf(math.sqrt(x / 2.0)).value,
    (-0.5, 0.0): lambda x: math.sqrt(2.0 * math.pi) * erfi(math.sqrt(x / 2.0)).value,
    (2.0, 0.5): lambda x: x * _half_exp(x),
    (0.0, 1.5): lambda x: 24.0 * math.sinh(x / 2.0) / x - 12.0,
    (1.0, 0.5): lambda x: 2.0 * (1.0 - _half_exp(x)),
    (2.0, 1.5): lambda x: 4.0 - 2.0 * (2.0 + x) * _half_exp(x),
}

MI_TAIL_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (0.5, 0.0): lambda x: math.sqrt(2.0 * math.pi) * erfc(math.sqrt(x / 2.0)).value,
    (1.0, 0.5): lambda x: 2.0 * _half_exp(x),
    (2.0, 0.5): lambda x: -x * _half_exp(x),
    (1.5, 0.0): lambda x: -2.0 * math.sqrt(x) * _half_exp(x),
    (4.0, 1.5): lambda x: (8.0 + (x - 2.0) ** 2 * x) * _half_exp(x) / 10.0,
}

WI_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (0.5, 0.0): lambda x: math.sqrt(2.0 * math.pi) * erf(math.sqrt(x / 2.0)).value,
    (1.0, 0.5): lambda x: 2.0 * (1.0 - _half_exp(x)),
    (1.0, -0.5): lambda x: 2.0 * (1.0 - _half_exp(x)),
    (2.0, 1.5): lambda x: 4.0 - 2.0 * (2.0 + x) * _half_exp(x),
    (2.0, 0.5): lambda x: -2.0 * x * _half_exp(x),
    (3.0, 2.5): lambda x: 16.0 - 2.0 * (8.0 + 4.0 * x + x * x) * _half_exp(x),
    (4.0, 0.5): lambda x: -2.0 * x * (12.0 - 6.0 * x + x * x) * _half_exp(x),
    (4.0, -0.5): lambda x: -2.0 * x * (12.0 - 6.0 * x + x * x) * _half_exp(x),
    (4.0, 1.5): lambda x: 16.0 - 2.0 * (8.0 + x * (x - 2.0) ** 2) * _half_exp(x),
    (4.0, 2.5): lambda x: -2.0 * x ** 3 * _half_exp(x),
    (0.25, 0.25): lambda x: 2.0 ** 0.25 * lower_gamma(0.25, x / 2.0),
}

WI_TAIL_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (0.5, 0.0): lambda x: math.sqrt(2.0 * math.pi) * erfc(math.sqrt(x / 2.0)).value,
    (0.0, -0.5): lambda x: e1(x / 2.0).value,
    (1.0, 0.5): lambda x: 2.0 * _half_exp(x),
    (1.5, 0.0): lambda x: 2.0 * math.sqrt(x) * _half_exp(x),
    (3.0, 0.5): lambda x: 2.0 * (2.0 + x * (x - 2.0)) * _half_exp(x),
    (1.0, 2.5): lambda x: 2.0 / (x * x) * (6.0 + x * (6.0 + x)) * _half_exp(x),
    (4.0, 1.5): lambda x: 2.0 * (8.0 + (x - 2.0) ** 2 * x) * _half_exp(x),
    (2.0, 0.5): lambda x: 2.0 * x * _half_exp(x),
}

REFERENCE_TABLES = {
    "M": M_TABLE,
    "W": W_TABLE,
    "Mi": MI_TABLE,
    "mi": MI_TAIL_TABLE,
    "Wi": WI_TABLE,
    "wi": WI_TAIL_TABLE,
}


def whittaker_reference(kind: str, params: WhittakerParams, x: float) -> EvalResult:
    """
    Tabulated closed form of M, W, Mi, mi, Wi or wi at (κ, μ)

    Raises:
        Unsupported: no row registered for (κ, μ)
    """
    _require_positive(x, "whittaker_reference")
    if kind not in REFERENCE_TABLES:
        raise InvalidParams(f"unknown Whittaker table {kind!r}")
    func = lookup_row(REFERENCE_TABLES[kind], params.kappa, params.mu)
    if func is None:
        raise Unsupported(f"no closed form registered for {kind}_{{{params.kappa},{params.mu}}}")
    value = func(x)
    return EvalResult(value, 1e-14 * abs(value) + EPS, 1)
