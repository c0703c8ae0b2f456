"""
Generalized hypergeometric series for specint
Term-recurrence summation with compensated accumulation, shared by every series in the package
"""
import logging
import math
from typing import Callable, List, Optional, Sequence

from .errors import InvalidParams, NoConvergence, RangeOverflow
from .schemas import EvalResult, PFQParams, SeriesControl

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16


class SeriesAccumulator:
    """
    Kahan-compensated running sum with the quiet-term stopping rule

    A term counts as quiet when it is below rel_tol relative to the running
    sum and the series is shrinking; the sum has settled after quiet_terms
    consecutive quiet terms. Exact zeros (pole terms) leave the counter alone.
    """

    def __init__(self, ctrl: SeriesControl):
        self.ctrl = ctrl
        self.total = 0.0
        self.abs_total = 0.0
        self.terms = 0
        self.last = 0.0
        self._comp = 0.0
        self._quiet = 0
        self._prev = math.inf

    def add(self, term: float):
        """Accumulate one term without touching the stopping rule"""
        if not math.isfinite(term):
            raise RangeOverflow(f"series term {self.terms} is not finite")
        y = term - self._comp
        t = self.total + y
        self._comp = (t - self.total) - y
        self.total = t
        self.abs_total += abs(term)
        self.terms += 1
        if term != 0.0:
            self.last = term

    def push(self, term: float, ratio: Optional[float] = None) -> bool:
        """
        Accumulate one term and report whether the sum has settled

        Args:
            term: the next term
            ratio: t_k / t_{k-1} when the caller knows it

        Returns:
            True once quiet_terms consecutive quiet terms were seen
        """
        self.add(term)
        if term == 0.0 and ratio is None:
            return False
        if ratio is not None:
            shrinking = abs(ratio) < 1.0
        else:
            shrinking = abs(term) <= self._prev
        self._prev = abs(term)
        if shrinking and abs(term) <= self.ctrl.rel_tol * abs(self.total):
            self._quiet += 1
        else:
            self._quiet = 0
        return self._quiet >= self.ctrl.quiet_terms

    def exhausted(self) -> bool:
        return self.terms >= self.ctrl.max_terms

    def result(self, exact: bool = False) -> EvalResult:
        """Sum with error |last term| + eps·Σ|t| (only the rounding part for finite sums)"""
        error = EPS * self.abs_total
        if not exact:
            error += abs(self.last)
        return EvalResult(self.total, error, self.terms)


def sum_recurrence(first: float, ratio: Callable[[int], float], ctrl: SeriesControl,
                   n_terms: Optional[int] = None) -> EvalResult:
    """
    Sum t_0 + t_1 + ... with t_{k+1} = t_k·ratio(k)

    Args:
        first: t_0
        ratio: ratio(k) = t_{k+1}/t_k
        ctrl: convergence policy
        n_terms: sum exactly this many terms (terminating series)

    Returns:
        EvalResult with the number of terms as work
    """
    acc = SeriesAccumulator(ctrl)
    term = first
    if n_terms is not None:
        for k in range(n_terms):
            if k:
                term *= ratio(k - 1)
            acc.add(term)
        return acc.result(exact=True)

    if first == 0.0:
        return EvalResult(0.0, 0.0, 1)

    r = None
    k = 0
    while True:
        if acc.push(term, r):
            return acc.result()
        if acc.exhausted():
            raise NoConvergence(f"series not settled after {acc.terms} terms (|last term|={abs(term):.3e})")
        r = ratio(k)
        term *= r
        k += 1


def signed_exp(log_abs: float, sign: int = 1) -> float:
    """sign·e^{log_abs} for log-domain terms; RangeOverflow past the double range"""
    if sign == 0 or log_abs == -math.inf:
        return 0.0
    if log_abs > 709.78:
        raise RangeOverflow(f"series term e^{log_abs:.1f} exceeds the double range")
    return math.copysign(math.exp(log_abs), sign)


def sum_terms(term: Callable[[int], float], ctrl: SeriesControl, start: int = 0) -> EvalResult:
    """
    Sum explicitly computed terms term(start), term(start+1), ...

    Used for log-domain series whose term ratio is not rational in k.
    """
    acc = SeriesAccumulator(ctrl)
    k = start
    while True:
        if acc.push(term(k)):
            return acc.result()
        if acc.exhausted():
            raise NoConvergence(f"series not settled after {acc.terms} terms")
        k += 1


def pfq(params: PFQParams, ctrl: Optional[SeriesControl] = None) -> EvalResult:
    """
    Generalized hypergeometric series ₚF_q(a; b; z)

    Args:
        params: upper/lower parameters and argument
        ctrl: convergence policy (defaults to SeriesControl())

    Returns:
        EvalResult

    Raises:
        InvalidParams: lower-parameter pole
        Divergent: p > q+1, or p = q+1 with |z| >= 1, for a non-terminating series
        NoConvergence: max_terms exhausted
    """
    ctrl = ctrl or SeriesControl()
    params.validate()
    upper, lower, z = params.upper, params.lower, params.z

    def ratio(k: int) -> float:
        num = z
        for a in upper:
            num *= a + k
        den = float(k + 1)
        for b in lower:
            den *= b + k
        return num / den

    m = params.terminating_degree()
    if m is not None:
        return sum_recurrence(1.0, ratio, ctrl, n_terms=m + 1)
    return sum_recurrence(1.0, ratio, ctrl)


def hyp(upper: Sequence[float], lower: Sequence[float], z: float,
        ctrl: Optional[SeriesControl] = None) -> float:
    """Value of ₚF_q(upper; lower; z)"""
    return pfq(PFQParams(tuple(upper), tuple(lower), z), ctrl).value


def gauss_2f1_sequence(b: float, c: float, z: float, count: int) -> List[float]:
    """
    F_n = ₂F₁(-n, b; c; z) for n = 0..count-1 by the three-term recurrence

    (c+n)F_{n+1} = (2n + c - (b+n)z)F_n + n(z-1)F_{n-1}
    """
    values = [1.0]
    if count <= 1:
        return values[:count]
    for n in range(count - 1):
        if c + n == 0:
            raise InvalidParams(f"c={c} makes the Pochhammer denominator vanish at n={n}")
        prev = values[n - 1] if n else 0.0
        values.append(((2 * n + c - (b + n) * z) * values[n] + n * (z - 1.0) * prev) / (c + n))
    return values


def gauss_2f1_terminating(n: int, b: float, c: float, z: float, method: str = "auto",
                          ctrl: Optional[SeriesControl] = None) -> EvalResult:
    """
    Terminating Gauss series ₂F₁(-n, b; c; z)

    Args:
        n: degree (>= 0)
        b, c: parameters
        z: argument
        method: "sum" (explicit n+1 terms), "recurrence" (in n), or "auto"
                (recurrence when |z| > 1, where the explicit sum cancels)

    Returns:
        EvalResult
    """
    if n < 0 or int(n) != n:
        raise InvalidParams(f"n must be a non-negative integer, got {n}")
    n = int(n)
    if method == "auto":
        method = "recurrence" if abs(z) > 1 else "sum"
    if method == "sum":
        return pfq(PFQParams((-n, b), (c,), z), ctrl)
    if method != "recurrence":
        raise InvalidParams(f"unknown method {method!r}")
    seq = gauss_2f1_sequence(b, c, z, n + 1)
    scale = max(abs(v) for v in seq)
    return EvalResult(seq[-1], EPS * (n + 1) * scale, n + 1)
