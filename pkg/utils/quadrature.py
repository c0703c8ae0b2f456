"""
Adaptive quadrature for specint
Gauss-Kronrod 15-point panels with global refinement, the reference integrator
for the integral functions and their Laplace transforms
"""
import heapq
import logging
import math
from typing import Callable, List, Optional, Sequence

import numpy as np

from .errors import DivergentIntegral, DomainError, ToleranceNotMet
from .schemas import EvalResult, QuadControl

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16
UFLOW = 2.2250738585072014e-308

# Kronrod abscissae (descending), the Gauss points are the odd entries
XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# rule nodes on [-1, 1]: left side, center, right side
_NODES = np.concatenate([-XGK[:-1], [0.0], XGK[:-1][::-1]])
_KRONROD = np.concatenate([WGK[:-1], [WGK[-1]], WGK[:-1][::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5]] = WG[:3]
_GAUSS[7] = WG[3]
_GAUSS[[9, 11, 13]] = WG[:3][::-1]


def gk15(f: Callable[[float], float], a: float, b: float):
    """
    One Gauss-Kronrod 15-point panel

    Returns:
        (integral, abserr, resabs) with the QUADPACK error heuristic
    """
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = np.array([f(float(center + half * t)) for t in _NODES], dtype=float)
    if not np.all(np.isfinite(values)):
        raise DomainError(f"integrand is not finite on [{a}, {b}]")

    resk = float(np.dot(_KRONROD, values))
    resg = float(np.dot(_GAUSS, values))
    resabs = float(np.dot(_KRONROD, np.abs(values)))
    resasc = float(np.dot(_KRONROD, np.abs(values - 0.5 * resk)))

    result = resk * half
    resabs *= abs(half)
    resasc *= abs(half)
    abserr = abs((resk - resg) * half)
    if resasc != 0.0 and abserr != 0.0:
        abserr = resasc * min(1.0, (200.0 * abserr / resasc) ** 1.5)
    if resabs > UFLOW / (50.0 * EPS):
        abserr = max(50.0 * EPS * resabs, abserr)
    return result, abserr, resabs


def integrate(f: Callable[[float], float], a: float, b: float,
              ctrl: Optional[QuadControl] = None, points: Optional[Sequence[float]] = None) -> EvalResult:
    """
    Globally adaptive integral of f over [a, b]

    The panel with the largest error estimate is bisected until the summed
    estimate meets max(abs_tol, rel_tol·|value|).

    Args:
        f: integrand
        a, b: limits
        ctrl: quadrature policy
        points: optional interior breakpoints for the initial panels

    Returns:
        EvalResult with the number of integrand evaluations as work

    Raises:
        ToleranceNotMet: max_depth or max_panels reached (carries the best estimate)
        DomainError: the integrand returned a non-finite value
    """
    ctrl = ctrl or QuadControl()
    if a == b:
        return EvalResult(0.0, 0.0, 0)
    if b < a:
        return integrate(f, b, a, ctrl, points).scaled(-1.0)

    edges = [a] + sorted(p for p in (points or ()) if a < p < b) + [b]
    heap: List[tuple] = []
    total = 0.0
    total_err = 0.0
    evaluations = 0
    for left, right in zip(edges[:-1], edges[1:]):
        value, err, _ = gk15(f, left, right)
        evaluations += 15
        heapq.heappush(heap, (-err, left, right, 0, value))
        total += value
        total_err += err

    while total_err > max(ctrl.abs_tol, ctrl.rel_tol * abs(total)):
        neg_err, left, right, depth, value = heap[0]
        if depth >= ctrl.max_depth or len(heap) >= ctrl.max_panels:
            best = EvalResult(math.fsum(p[4] for p in heap), total_err, evaluations)
            raise ToleranceNotMet(
                f"quadrature on [{a}, {b}] stopped at error {total_err:.3e} after {len(heap)} panels",
                result=best,
            )
        heapq.heappop(heap)
        mid = 0.5 * (left + right)
        total -= value
        total_err += neg_err
        for lo, hi in ((left, mid), (mid, right)):
            v, e, _ = gk15(f, lo, hi)
            evaluations += 15
            heapq.heappush(heap, (-e, lo, hi, depth + 1, v))
            total += v
            total_err += e

    value = math.fsum(p[4] for p in heap)
    error = math.fsum(-p[0] for p in heap)
    return EvalResult(value, error, evaluations)


def integrate_fi(f: Callable[[float], float], f_at_zero: float, x: float,
                 ctrl: Optional[QuadControl] = None) -> EvalResult:
    """
    ∫₀^x (f(t) - f(0))/t dt

    Below t = x·2^{-40} the integrand is taken as constant at its value there.
    """
    if not x > 0:
        raise DomainError(f"integrate_fi needs x > 0, got {x}")
    ctrl = ctrl or QuadControl()
    head = x * 2.0 ** -40

    def integrand(t: float) -> float:
        return (f(t) - f_at_zero) / t

    body = integrate(integrand, head, x, ctrl)
    start = integrand(head) * head
    return EvalResult(body.value + start, body.est_error + abs(start) * 1e-6, body.work + 1)


def integrate_singular(f: Callable[[float], float], x: float, sigma: float,
                       ctrl: Optional[QuadControl] = None) -> EvalResult:
    """
    ∫₀^x f(t) dt for f(t) ~ t^{σ-1} at the origin

    Substitutes t = x·u^{1/σ}, which turns the endpoint singularity into a
    smooth integrand on [0, 1].
    """
    if not (x > 0 and sigma > 0):
        raise DomainError(f"integrate_singular needs x > 0 and sigma > 0, got x={x}, sigma={sigma}")
    inv = 1.0 / sigma

    def integrand(u: float) -> float:
        return f(x * u ** inv) * (x * inv) * u ** (inv - 1.0)

    return integrate(integrand, 0.0, 1.0, ctrl)


def integrate_decaying(g: Callable[[float], float], a: float, log_bound: Callable[[float], float],
                       ctrl: Optional[QuadControl] = None, log_scale: float = 0.0) -> EvalResult:
    """
    ∫_a^∞ g(t) dt for an integrand under a decaying log-envelope

    Args:
        g: integrand
        a: lower limit
        log_bound: monotone bound on ln|g(t)|
        ctrl: quadrature policy
        log_scale: truncation threshold offset (tail_log_threshold + log_scale)

    Returns:
        EvalResult whose est_error includes the truncated tail bound

    Raises:
        DivergentIntegral: the envelope does not fall below threshold by 10^6
    """
    ctrl = ctrl or QuadControl()
    threshold = ctrl.tail_log_threshold + log_scale
    h = 1.0
    while log_bound(a + h) >= threshold:
        h *= 2.0
        if a + h > 1e6:
            raise DivergentIntegral(f"integrand envelope does not decay below e^{threshold:g} before t=1e6")
    upper = a + h
    slope = log_bound(upper) - log_bound(upper + 1.0)
    if not slope > 0:
        raise DivergentIntegral(f"integrand envelope is not decreasing at t={upper}")

    points = []
    step = 1.0
    while step < h:
        points.append(a + step)
        step *= 2.0
    body = integrate(g, a, upper, ctrl, points)
    tail = math.exp(log_bound(upper)) / slope
    logger.debug(f"decaying integral truncated at T={upper:g}, tail bound {tail:.3e}")
    return EvalResult(body.value, body.est_error + tail, body.work)


def integrate_tail(f: Callable[[float], float], x: float, decay_log_bound: Callable[[float], float],
                   ctrl: Optional[QuadControl] = None) -> EvalResult:
    """
    ∫_x^∞ f(t)/t dt

    Args:
        f: base function
        x: lower limit, > 0
        decay_log_bound: monotone bound on ln|f(t)/t| for t >= x
        ctrl: quadrature policy
    """
    if not x > 0:
        raise DomainError(f"integrate_tail needs x > 0, got {x}")
    return integrate_decaying(lambda t: f(t) / t, x, decay_log_bound, ctrl)


def laplace_quad(f: Callable[[float], float], s: float, ctrl: Optional[QuadControl] = None,
                 growth: float = 0.0, log_scale: float = 0.0, power: float = 0.0) -> EvalResult:
    """
    F(s) = ∫₀^∞ e^{-st} f(t) dt

    Args:
        f: time-domain function
        s: transform variable, > 0
        growth: exponential order of f
        log_scale: ln of the bound on |f| near the origin
        power: polynomial growth exponent of the bound, in ln(1+t)
    """
    if not s > 0:
        raise DomainError(f"laplace_quad needs s > 0, got {s}")
    if growth >= s:
        raise DivergentIntegral(f"exponential order {growth} is not below s={s}")

    def envelope(t: float) -> float:
        return log_scale + power * math.log1p(t) + (growth - s) * t

    return integrate_decaying(lambda t: math.exp(-s * t) * f(t), 0.0, envelope, ctrl)
