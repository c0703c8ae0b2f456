"""
Wright functions for specint
Wright and Mainardi functions, the integral Wright and integral Mainardi functions,
their rational-α hypergeometric reductions and tabulated closed forms
"""
import logging
import math
from typing import Callable, Dict, Tuple

from .elementary import (EULER, SQRT_PI, airy_ai, bessel_i, ein, erf, hyp_integrals, log_gamma,
                         log_rgamma_sign, rgamma)
from .errors import DomainError, InvalidParams, NoConvergence, Unsupported
from .hypergeometric import EPS, hyp, pfq, signed_exp, sum_terms
from .mittag_leffler import lookup_row
from .quadrature import integrate
from .schemas import EvalResult, PFQParams, QuadControl, RationalAlpha, SeriesControl, WrightParams, combine

logger = logging.getLogger(__name__)

_SERIES = SeriesControl()

SECOND_KIND_LIMIT = 10.0
KANTER_SWITCH = 2.0
# largest block over the sum; beyond it the rational form has lost more than ~6 digits
RATIONAL_CANCELLATION_LIMIT = 1e6

_KANTER_QUAD = QuadControl(abs_tol=1e-300, rel_tol=1e-12)


def _x_sign(x: float, k: int) -> int:
    return -1 if x < 0 and k % 2 else 1


# Wright functions

def wright_w(params: WrightParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    W_{α,β}(x) = Σ x^k/(k!Γ(αk+β))

    Args:
        params: (α, β), α >= -1
        x: argument; |x| <= 10 for -1 < α < 0, x > -1 for α = -1
        ctrl: series policy

    Returns:
        EvalResult

    Raises:
        DomainError: α = -1 with x <= -1
        NoConvergence: second-kind series outside |x| <= 10
    """
    alpha, beta = params.alpha, params.beta
    if alpha == -1:
        if not x > -1:
            raise DomainError(f"W_{{-1,β}}(x) = (1+x)^{{β-1}}/Γ(β) needs x > -1, got {x}")
        value = (1.0 + x) ** (beta - 1.0) * rgamma(beta)
        return EvalResult(value, EPS * abs(value), 1)
    if alpha == 0:
        value = math.exp(x) * rgamma(beta)
        return EvalResult(value, EPS * abs(value), 1)
    if alpha < 0 and abs(x) > SECOND_KIND_LIMIT:
        raise NoConvergence(f"second-kind Wright series is limited to |x| <= {SECOND_KIND_LIMIT}, got {x}")
    if x == 0:
        return EvalResult(rgamma(beta), 0.0, 1)

    log_x = math.log(abs(x))

    def term(k: int) -> float:
        log_r, sign = log_rgamma_sign(alpha * k + beta)
        return signed_exp(k * log_x - log_gamma(k + 1.0) + log_r, sign * _x_sign(x, k))

    return sum_terms(term, ctrl)


def wright_rational(p_q: RationalAlpha, beta: float, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    W_{p/q,β}(x) as q blocks x^k/(k!Γ(pk/q+β))·₀F_{p+q-1}(; b, c*; x^q/(p^p q^q))

    b_j = k/q + (β+j)/p and c_j = (k+1+j)/q with the entry equal to 1 dropped.
    Falls back to the direct series when a block's leading gamma is at a pole.
    """
    p, q = p_q.p, p_q.q
    z = x ** q / (p ** p * q ** q)
    parts = []
    try:
        for k in range(q):
            lead = rgamma(p * k / q + beta)
            if lead == 0.0:
                raise InvalidParams(f"Γ(pk/q+β) is at a pole for k={k}")
            lower = [k / q + (beta + j) / p for j in range(p)]
            lower += [(k + 1 + j) / q for j in range(q) if j != q - 1 - k]
            parts.append((x ** k / math.factorial(k) * lead, pfq(PFQParams((), tuple(lower), z), ctrl)))
    except InvalidParams as e:
        logger.debug(f"wright_rational {p_q}, β={beta}: {e}; using the direct series")
        return wright_w(WrightParams(p_q.value, beta), x, ctrl)
    return combine(*parts)


# Mainardi functions

def _require_mainardi(alpha: float, x: float):
    if not 0 < alpha < 1:
        raise DomainError(f"Mainardi functions need 0 < α < 1, got {alpha}")
    if x < 0:
        raise DomainError(f"Mainardi functions need x >= 0, got {x}")


def _mainardi_m_term(alpha: float, log_x: float, k: int) -> Tuple[float, int]:
    """ln|term| and sign of (-x)^kΓ(α(k+1))sin(πα(k+1))/k!"""
    s = math.sin(math.pi * alpha * (k + 1))
    if s == 0.0:
        return -math.inf, 0
    sign = (-1 if k % 2 else 1) * (1 if s > 0 else -1)
    return k * log_x + log_gamma(alpha * (k + 1)) + math.log(abs(s)) - log_gamma(k + 1.0), sign


def _largest_log_term(alpha: float, log_x: float, ctrl: SeriesControl) -> float:
    peak = -math.inf
    for k in range(ctrl.max_terms):
        log_t = k * log_x + log_gamma(alpha * (k + 1)) - log_gamma(k + 1.0)
        peak = max(peak, log_t)
        if k > 10 and log_t < peak - 50.0:
            break
    return peak


def _kanter_m(alpha: float, x: float) -> EvalResult:
    """
    M_α(x) = x^{α/(1-α)}/(π(1-α))·∫₀^π A(φ)exp(-x^{1/(1-α)}A(φ)) dφ

    A(φ) = sin(αφ)^{α/(1-α)}·sin((1-α)φ)/sin(φ)^{1/(1-α)}
    """
    inv = 1.0 / (1.0 - alpha)
    scale = x ** inv

    def integrand(phi: float) -> float:
        log_a = (alpha * inv * math.log(math.sin(alpha * phi)) + math.log(math.sin((1.0 - alpha) * phi))
                 - inv * math.log(math.sin(phi)))
        a = math.exp(min(log_a, 700.0))
        exponent = log_a - scale * a
        return math.exp(exponent) if exponent > -745.0 else 0.0

    res = integrate(integrand, 0.0, math.pi, _KANTER_QUAD)
    return res.scaled(x ** (alpha * inv) / (math.pi * (1.0 - alpha)))


def mainardi(kind: str, alpha: float, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Mainardi F_α(x) = W_{-α,0}(-x) or M_α(x) = W_{-α,1-α}(-x), with F_α = αxM_α

    The reflected series (1/π)Σ(-x)^kΓ(α(k+1))sin(πα(k+1))/k! is used while its
    largest term stays below e²; past that the Kanter integral.

    Args:
        kind: "F" or "M"
        alpha: 0 < α < 1
        x: argument, >= 0
        ctrl: series policy

    Returns:
        EvalResult
    """
    if kind not in ("F", "M"):
        raise InvalidParams(f"unknown Mainardi function {kind!r}, expected F or M")
    _require_mainardi(alpha, x)
    if x == 0:
        if kind == "F":
            return EvalResult(0.0, 0.0, 0)
        return EvalResult(rgamma(1.0 - alpha), 0.0, 1)

    log_x = math.log(x)
    if _largest_log_term(alpha, log_x, ctrl) > KANTER_SWITCH:
        logger.debug(f"Mainardi {kind}_{alpha}({x}): series cancels, using the Kanter integral")
        m = _kanter_m(alpha, x)
    else:
        m = sum_terms(lambda k: signed_exp(*_mainardi_m_term(alpha, log_x, k)), ctrl).scaled(1.0 / math.pi)
    return m if kind == "M" else m.scaled(alpha * x)


def mainardi_rational(kind: str, p_q: RationalAlpha, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Mainardi functions at α = p/q < 1 as finite sums of ₚF_{q-1} functions

    F = -(1/π)Σ_{r=1}^{q-1}(-x)^rΓ(1+pr/q)sin(πpr/q)/r!·ₚF_{q-1}(a; c*; (-1)^{p+q}p^p x^q/q^q)
    with a_j = r/q + (j+1)/p; M = qF/(px).

    The blocks alternate and cancel as x grows; the loss max|cᵣ·Fᵣ|/|F| is folded into
    est_error, and past RATIONAL_CANCELLATION_LIMIT the reflected series / Kanter path is used.
    """
    if kind not in ("F", "M"):
        raise InvalidParams(f"unknown Mainardi function {kind!r}, expected F or M")
    p, q = p_q.p, p_q.q
    if not p < q:
        raise DomainError(f"Mainardi functions need p/q < 1, got {p_q}")
    _require_mainardi(p_q.value, x)
    if x == 0:
        return mainardi(kind, p_q.value, x, ctrl)

    z = (-1) ** (p + q) * p ** p * x ** q / q ** q
    parts = []
    for r in range(1, q):
        upper = tuple(r / q + (j + 1) / p for j in range(p))
        lower = tuple((r + 1 + j) / q for j in range(q) if j != q - 1 - r)
        coeff = (-(-x) ** r * math.exp(log_gamma(1.0 + p * r / q) - log_gamma(r + 1.0))
                 * math.sin(math.pi * p * r / q) / math.pi)
        parts.append((coeff, pfq(PFQParams(upper, lower, z), ctrl)))
    f = combine(*parts)
    largest = max(abs(coeff * block.value) for coeff, block in parts)
    cancellation = largest / abs(f.value) if f.value else math.inf
    if cancellation > RATIONAL_CANCELLATION_LIMIT:
        logger.debug(f"mainardi_rational({kind}, {p_q}, {x}): blocks cancel by {cancellation:.3g}, using mainardi")
        return mainardi(kind, p_q.value, x, ctrl)
    f = EvalResult(f.value, f.est_error + cancellation * EPS * abs(f.value), f.work)
    return f if kind == "F" else f.scaled(q / (p * x))


def mainardi_density_mass(alpha: float, upper: float = 30.0) -> EvalResult:
    """∫₀^T M_α(t) dt, which tends to 1 as T grows"""
    return integrate(lambda t: mainardi("M", alpha, t).value, 0.0, upper, QuadControl(abs_tol=1e-12, rel_tol=1e-10),
                     points=[1.0, 2.0, 4.0, 8.0])


# Integral Wright functions

def integral_wright(params: WrightParams, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Wi_{α,β}(x) = ∫₀^x (W_{α,β}(t) - 1/Γ(β))/t dt = Σ_{k>=1} x^k/(k·k!Γ(αk+β))

    Args:
        params: (α, β)
        x: argument, >= 0; x < 1 for α = -1, x <= 10 for -1 < α < 0
        ctrl: series policy

    Returns:
        EvalResult
    """
    alpha, beta = params.alpha, params.beta
    if x < 0:
        raise DomainError(f"integral Wright functions need x >= 0, got {x}")
    if alpha == -1 and not x < 1:
        raise DomainError(f"Wi_{{-1,β}} series converges for x < 1, got {x}")
    if -1 < alpha < 0 and x > SECOND_KIND_LIMIT:
        raise NoConvergence(f"second-kind integral Wright series is limited to x <= {SECOND_KIND_LIMIT}, got {x}")
    if x == 0:
        return EvalResult(0.0, 0.0, 0)

    log_x = math.log(x)

    def term(k: int) -> float:
        log_r, sign = log_rgamma_sign(alpha * k + beta)
        return signed_exp(k * log_x - math.log(k) - log_gamma(k + 1.0) + log_r, sign)

    return sum_terms(term, ctrl, start=1)


def integral_wright_rational(p_q: RationalAlpha, beta: float, x: float,
                             ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Wi_{p/q,β}(x) = Σ_{k=1}^{q} x^k/(k·k!Γ(pk/q+β))·₂F_{p+q+1}(1, k/q; b, c, k/q+1; x^q/(p^p q^q))

    b_j = k/q + (β+j)/p, c_j = (k+1+j)/q.
    """
    p, q = p_q.p, p_q.q
    if x < 0:
        raise DomainError(f"integral Wright functions need x >= 0, got {x}")
    if x == 0:
        return EvalResult(0.0, 0.0, 0)
    z = x ** q / (p ** p * q ** q)
    parts = []
    try:
        for k in range(1, q + 1):
            lead = rgamma(p * k / q + beta)
            if lead == 0.0:
                raise InvalidParams(f"Γ(pk/q+β) is at a pole for k={k}")
            lower = [k / q + (beta + j) / p for j in range(p)]
            lower += [(k + 1 + j) / q for j in range(q)]
            lower.append(k / q + 1.0)
            coeff = x ** k / (k * math.factorial(k)) * lead
            parts.append((coeff, pfq(PFQParams((1.0, k / q), tuple(lower), z), ctrl)))
    except InvalidParams as e:
        logger.debug(f"integral_wright_rational {p_q}, β={beta}: {e}; using the direct series")
        return integral_wright(WrightParams(p_q.value, beta), x, ctrl)
    return combine(*parts)


# Integral Mainardi functions

def integral_mainardi(kind: str, p_q: RationalAlpha, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Fi_α(x) = ∫₀^x F_α(t)/t dt or Mi_α(x) = ∫₀^x (M_α(t) - M_α(0))/t dt at α = p/q < 1

    Each residue class r of the series index mod q gives a
    _{p+2}F_{q+1}(1, r/q, a; r/q+1, c; (-1)^{p+q}p^p x^q/q^q) with c_j = (r+1+j)/q,
    a_j = r/q + (j+1)/p for Fi and a_j = (r+1)/q + j/p for Mi.
    """
    if kind not in ("Fi", "Mi"):
        raise InvalidParams(f"unknown integral Mainardi function {kind!r}, expected Fi or Mi")
    p, q = p_q.p, p_q.q
    if not p < q:
        raise DomainError(f"integral Mainardi functions need p/q < 1, got {p_q}")
    if x < 0:
        raise DomainError(f"integral Mainardi functions need x >= 0, got {x}")
    if x == 0:
        return EvalResult(0.0, 0.0, 0)

    z = (-1) ** (p + q) * p ** p * x ** q / q ** q
    parts = []
    for r in range(1, q + 1):
        lower = (r / q + 1.0,) + tuple((r + 1 + j) / q for j in range(q))
        if kind == "Fi":
            s = math.sin(math.pi * p * r / q)
            weight = -s * math.exp(log_gamma(1.0 + p * r / q))
            a_list = tuple(r / q + (j + 1) / p for j in range(p))
        else:
            s = math.sin(math.pi * p * (r + 1) / q)
            weight = s * math.exp(log_gamma(p * (r + 1) / q))
            a_list = tuple((r + 1) / q + j / p for j in range(p))
        if abs(s) < 1e-14:
            continue
        coeff = weight * (-x) ** r / (r * math.factorial(r) * math.pi)
        parts.append((coeff, pfq(PFQParams((1.0, r / q) + a_list, lower, z), ctrl)))
    return combine(*parts)


def integral_mainardi_series(kind: str, alpha: float, x: float, ctrl: SeriesControl = _SERIES) -> EvalResult:
    """
    Direct series for any 0 < α < 1

    Fi = -(1/π)Σ_{k>=1}(-x)^kΓ(αk+1)sin(παk)/(k·k!)
    Mi = (1/π)Σ_{k>=1}(-x)^kΓ(α(k+1))sin(πα(k+1))/(k·k!)
    """
    if kind not in ("Fi", "Mi"):
        raise InvalidParams(f"unknown integral Mainardi function {kind!r}, expected Fi or Mi")
    _require_mainardi(alpha, x)
    if x == 0:
        return EvalResult(0.0, 0.0, 0)
    log_x = math.log(x)

    def term(k: int) -> float:
        if kind == "Fi":
            s = -math.sin(math.pi * alpha * k)
            log_g = log_gamma(alpha * k + 1.0)
        else:
            s = math.sin(math.pi * alpha * (k + 1))
            log_g = log_gamma(alpha * (k + 1))
        if s == 0.0:
            return 0.0
        sign = (-1 if k % 2 else 1) * (1 if s > 0 else -1)
        return signed_exp(k * log_x + log_g + math.log(abs(s)) - math.log(k) - log_gamma(k + 1.0), sign)

    return sum_terms(term, ctrl, start=1).scaled(1.0 / math.pi)


# Tabulated closed forms

def _hyp0(lower, z: float) -> float:
    return hyp([], lower, z)


def _wright_integer(n: int) -> Callable[[float, float], float]:
    def row(beta: float, x: float) -> float:
        return rgamma(beta) * _hyp0([(beta + j) / n for j in range(n)], x / n ** n)
    return row


def _wright_one(beta: float, x: float) -> float:
    if x > 0:
        return x ** ((1.0 - beta) / 2.0) * bessel_i(beta - 1.0, 2.0 * math.sqrt(x)).value
    return rgamma(beta) * _hyp0([beta], x)


def _wright_half(beta: float, x: float) -> float:
    y = x * x / 4.0
    return rgamma(beta) * _hyp0([beta, 0.5], y) + x * rgamma(beta + 0.5) * _hyp0([beta + 0.5, 1.5], y)


WRIGHT_TABLE: Dict[Tuple[float, float], Callable[[float], float]] = {
    (1.0, 0.5): lambda x: math.cosh(2.0 * math.sqrt(x)) / SQRT_PI,
    (1.0, 1.5): lambda x: math.sinh(2.0 * math.sqrt(x)) / (SQRT_PI * math.sqrt(x)),
    (-0.5, 0.5): lambda x: math.exp(-x * x / 4.0) / SQRT_PI,
    (-0.5, 1.0): lambda x: erf(x / 2.0).value + 1.0,
}

WRIGHT_GENERIC: Dict[float, Callable[[float, float], float]] = {
    0.0: lambda beta, x: math.exp(x) * rgamma(beta),
    -1.0: lambda beta, x: (1.0 + x) ** (beta - 1.0) * rgamma(beta),
    0.5: _wright_half,
    1.0: _wright_one,
    2.0: _wright_integer(2),
    3.0: _wright_integer(3),
}

MAINARDI_TABLE: Dict[Tuple[str, float], Callable[[float], float]] = {
    ("F", 0.5): lambda x: x * math.exp(-x * x / 4.0) / (2.0 * SQRT_PI),
    ("M", 0.5): lambda x: math.exp(-x * x / 4.0) / SQRT_PI,
    ("M", 1.0 / 3.0): lambda x: 3.0 ** (2.0 / 3.0) * airy_ai("Ai", x * 3.0 ** (-1.0 / 3.0)).value,
    ("F", 1.0 / 3.0): lambda x: 3.0 ** (-1.0 / 3.0) * x * airy_ai("Ai", x * 3.0 ** (-1.0 / 3.0)).value,
}


def _iwright_integer(n: int) -> Callable[[float, float], float]:
    def row(beta: float, x: float) -> float:
        lower = [2.0, 2.0] + [1.0 + (beta + j) / n for j in range(n)]
        return x * rgamma(beta + n) * hyp([1.0, 1.0], lower, x / n ** n)
    return row


def _iwright_zero(beta: float, x: float) -> float:
    chi = hyp_integrals("Chi", x).value
    shi = hyp_integrals("Shi", x).value
    return (-EULER - math.log(x) + chi + shi) * rgamma(beta)


def _iwright_half(beta: float, x: float) -> float:
    y = x * x / 4.0
    return (x * x / 4.0 * rgamma(1.0 + beta) * hyp([1.0, 1.0], [1.5, 2.0, 2.0, beta + 1.0], y)
            + x * rgamma(0.5 + beta) * hyp([0.5], [1.5, 1.5, beta + 0.5], y))


def _iwright_minus_one(beta: float, x: float) -> float:
    return x * rgamma(beta - 1.0) * hyp([1.0, 1.0, 2.0 - beta], [2.0, 2.0], -x)


IWRIGHT_GENERIC: Dict[float, Callable[[float, float], float]] = {
    0.0: _iwright_zero,
    -1.0: _iwright_minus_one,
    0.5: _iwright_half,
    1.0: _iwright_integer(1),
    2.0: _iwright_integer(2),
    3.0: _iwright_integer(3),
    4.0: _iwright_integer(4),
}


def _imainardi_f_third(x: float) -> float:
    y = x ** 3 / 27.0
    return x / 4.0 * (x * rgamma(-2.0 / 3.0) * hyp([2.0 / 3.0], [4.0 / 3.0, 5.0 / 3.0], y)
                      - 4.0 * rgamma(-1.0 / 3.0) * hyp([1.0 / 3.0], [2.0 / 3.0, 4.0 / 3.0], y))


def _imainardi_f_two_thirds(x: float) -> float:
    y = -4.0 * x ** 3 / 27.0
    return x / 4.0 * (x * rgamma(-4.0 / 3.0) * hyp([2.0 / 3.0, 7.0 / 6.0], [4.0 / 3.0, 5.0 / 3.0], y)
                      - 4.0 * rgamma(-2.0 / 3.0) * hyp([1.0 / 3.0, 5.0 / 6.0], [2.0 / 3.0, 4.0 / 3.0], y))


def _imainardi_m_half(x: float) -> float:
    y = x * x / 4.0
    return -ein(y).value / (2.0 * SQRT_PI)


def _imainardi_m_third(x: float) -> float:
    y = x ** 3 / 27.0
    return (-x ** 3 / 18.0 * rgamma(-1.0 / 3.0) * hyp([1.0, 1.0], [5.0 / 3.0, 2.0, 2.0], y)
            - x * rgamma(1.0 / 3.0) * hyp([1.0 / 3.0], [4.0 / 3.0, 4.0 / 3.0], y))


IMAINARDI_TABLE: Dict[Tuple[str, float], Callable[[float], float]] = {
    ("Fi", 0.5): lambda x: 0.5 * erf(x / 2.0).value,
    ("Fi", 1.0 / 3.0): _imainardi_f_third,
    ("Fi", 2.0 / 3.0): _imainardi_f_two_thirds,
    ("Mi", 0.5): _imainardi_m_half,
    ("Mi", 1.0 / 3.0): _imainardi_m_third,
}


def _exact(value: float) -> EvalResult:
    return EvalResult(value, 1e-14 * abs(value) + EPS, 1)


def _keyed_lookup(table: Dict, kind: str, alpha: float):
    for (row_kind, row_alpha), func in table.items():
        if row_kind == kind and abs(row_alpha - alpha) <= 1e-12:
            return func
    return None


def wright_reference(params: WrightParams, x: float) -> EvalResult:
    """
    W_{α,β}(x) from its tabulated closed form

    Raises:
        Unsupported: no row for (α, β)
    """
    func = lookup_row(WRIGHT_TABLE, params.alpha, params.beta)
    if func is not None:
        return _exact(func(x))
    generic = lookup_row(WRIGHT_GENERIC, params.alpha)
    if generic is None:
        raise Unsupported(f"no closed form registered for W_{{{params.alpha},{params.beta}}}")
    return _exact(generic(params.beta, x))


def mainardi_reference(kind: str, alpha: float, x: float) -> EvalResult:
    """F_α or M_α from its tabulated closed form"""
    func = _keyed_lookup(MAINARDI_TABLE, kind, alpha)
    if func is None:
        raise Unsupported(f"no closed form registered for {kind}_{alpha}")
    return _exact(func(x))


def integral_wright_reference(params: WrightParams, x: float) -> EvalResult:
    """Wi_{α,β}(x) from its tabulated closed form"""
    if not x > 0:
        raise DomainError(f"integral_wright_reference needs x > 0, got {x}")
    generic = lookup_row(IWRIGHT_GENERIC, params.alpha)
    if generic is None:
        raise Unsupported(f"no closed form registered for Wi_{{{params.alpha},{params.beta}}}")
    return _exact(generic(params.beta, x))


def integral_mainardi_reference(kind: str, alpha: float, x: float) -> EvalResult:
    """Fi_α or Mi_α from its tabulated closed form"""
    if not x > 0:
        raise DomainError(f"integral_mainardi_reference needs x > 0, got {x}")
    func = _keyed_lookup(IMAINARDI_TABLE, kind, alpha)
    if func is None:
        raise Unsupported(f"no closed form registered for {kind}_{alpha}")
    return _exact(func(x))
