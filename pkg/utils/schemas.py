"""
Data schemas and structure definitions for specint
Defines results, convergence policies, parameter records and CLI request types
"""
import math
import os
from dataclasses import dataclass, field, asdict
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Any, Tuple

import numpy as np

from .errors import InvalidParams, Divergent


class Family(Enum):
    """Function families reachable from the command line"""
    ML = "ml"
    IML = "iml"
    WHITTAKER_M = "whittaker_m"
    WHITTAKER_W = "whittaker_w"
    MI = "mi"
    WI = "wi"
    MI_TAIL = "mi_tail"
    WI_TAIL = "wi_tail"
    WRIGHT = "wright"
    IWRIGHT = "iwright"
    MAINARDI_F = "mainardi_f"
    MAINARDI_M = "mainardi_m"
    IMAINARDI_F = "imainardi_f"
    IMAINARDI_M = "imainardi_m"
    LT_ML = "lt_ml"
    LT_IML = "lt_iml"
    ELEMENTARY = "elementary"


class Spacing(Enum):
    """Grid spacing"""
    LINEAR = "linear"
    LOG = "log"


class FixtureStatus(Enum):
    """Verification status of a registered table row"""
    VERIFIED = "verified"
    UNVERIFIED = "unverified"


class CaseStatus(Enum):
    """Outcome of a single check case"""
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"
    ERROR = "ERROR"


@dataclass
class EvalResult:
    """A computed value with an absolute error estimate and a work counter"""
    value: float
    est_error: float = 0.0
    work: int = 0

    def __post_init__(self):
        if not self.est_error >= 0.0:
            raise InvalidParams(f"est_error must be non-negative, got {self.est_error}")
        if self.work < 0:
            raise InvalidParams(f"work must be non-negative, got {self.work}")

    def scaled(self, factor: float) -> "EvalResult":
        """Multiply the value (and its error) by a constant"""
        return EvalResult(self.value * factor, self.est_error * abs(factor), self.work)

    def shifted(self, offset: float) -> "EvalResult":
        """Add a constant to the value"""
        value = self.value + offset
        return EvalResult(value, self.est_error + 2.2e-16 * abs(value), self.work)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return asdict(self)


@dataclass
class LnGammaResult(EvalResult):
    """ln|Γ(x)| together with the sign of Γ(x)"""
    sign: int = 1


def combine(*parts: Tuple[float, EvalResult]) -> EvalResult:
    """
    Linear combination Σ cᵢ·rᵢ of results

    Args:
        parts: (coefficient, result) pairs

    Returns:
        EvalResult with summed errors and work
    """
    value = 0.0
    error = 0.0
    work = 0
    for coeff, res in parts:
        value += coeff * res.value
        error += abs(coeff) * res.est_error
        work += res.work
    return EvalResult(value, error + 2.2e-16 * abs(value), work)


@dataclass(frozen=True)
class SeriesControl:
    """Convergence policy for infinite series"""
    rel_tol: float = 1e-15
    max_terms: int = 10_000
    quiet_terms: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise InvalidParams(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise InvalidParams(f"max_terms must be at least 1, got {self.max_terms}")
        if self.quiet_terms < 1:
            raise InvalidParams(f"quiet_terms must be at least 1, got {self.quiet_terms}")

    @classmethod
    def from_env(cls, rel_tol: Optional[float] = None, max_terms: Optional[int] = None) -> "SeriesControl":
        """
        Build a policy from SPECINT_* environment variables

        Args:
            rel_tol: explicit override, wins over the environment
            max_terms: explicit override, wins over the environment

        Returns:
            SeriesControl
        """
        if max_terms is None:
            raw = os.getenv('SPECINT_MAX_TERMS')
            if raw:
                try:
                    max_terms = int(raw)
                except ValueError:
                    raise InvalidParams(f"SPECINT_MAX_TERMS is not an integer: {raw!r}")
        if rel_tol is None:
            raw = os.getenv('SPECINT_REL_TOL')
            if raw:
                try:
                    rel_tol = float(raw)
                except ValueError:
                    raise InvalidParams(f"SPECINT_REL_TOL is not a number: {raw!r}")
        defaults = cls()
        return cls(
            rel_tol=defaults.rel_tol if rel_tol is None else rel_tol,
            max_terms=defaults.max_terms if max_terms is None else max_terms,
        )


@dataclass(frozen=True)
class QuadControl:
    """Adaptive-quadrature policy"""
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_depth: int = 50
    tail_log_threshold: float = -35.0
    max_panels: int = 4000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InvalidParams("quadrature tolerances must be positive")
        if self.max_depth < 1:
            raise InvalidParams(f"max_depth must be at least 1, got {self.max_depth}")


@dataclass(frozen=True)
class RationalAlpha:
    """A positive rational p/q in lowest terms"""
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise InvalidParams(f"p and q must be integers, got {self.p!r}, {self.q!r}")
        if self.p < 1 or self.q < 1:
            raise InvalidParams(f"p and q must be positive, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidParams(f"{self.p}/{self.q} is not in lowest terms")

    @property
    def value(self) -> float:
        return self.p / self.q

    @classmethod
    def from_float(cls, alpha: float, max_denominator: int = 64) -> "RationalAlpha":
        """Nearest p/q with q <= max_denominator; InvalidParams if not exact to 1e-12"""
        frac = Fraction(alpha).limit_denominator(max_denominator)
        if abs(float(frac) - alpha) > 1e-12 * max(1.0, abs(alpha)):
            raise InvalidParams(f"alpha={alpha} is not a rational with denominator <= {max_denominator}")
        return cls(frac.numerator, frac.denominator)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class MLParams:
    """Mittag-Leffler parameters (α, β)"""
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise InvalidParams(f"Mittag-Leffler parameters must be positive, got α={self.alpha}, β={self.beta}")


@dataclass(frozen=True)
class WhittakerParams:
    """Whittaker parameters (κ, μ)"""
    kappa: float
    mu: float

    def require_m_series(self):
        """1 + 2μ must not be a non-positive integer"""
        c = 1.0 + 2.0 * self.mu
        if c <= 0 and c == math.floor(c):
            raise InvalidParams(f"1+2μ={c} is a pole of the Kummer series")

    def require_integrable(self):
        """t^{μ-1/2} must be integrable at the origin"""
        if not self.mu > -0.5:
            raise InvalidParams(f"μ={self.mu} must exceed -1/2 for Mi/mi")


@dataclass(frozen=True)
class WrightParams:
    """Wright parameters (α, β)"""
    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha < -1:
            raise InvalidParams(f"Wright α must exceed -1 (α = -1 only through its closed forms), got {self.alpha}")


@dataclass(frozen=True)
class PFQParams:
    """Generalized hypergeometric parameters ₚF_q(upper; lower; z)"""
    upper: Tuple[float, ...]
    lower: Tuple[float, ...]
    z: float

    def __post_init__(self):
        object.__setattr__(self, 'upper', tuple(float(a) for a in self.upper))
        object.__setattr__(self, 'lower', tuple(float(b) for b in self.lower))

    def terminating_degree(self) -> Optional[int]:
        """Smallest m with -m among the upper parameters, or None"""
        degrees = [int(-a) for a in self.upper if a <= 0 and a == math.floor(a)]
        return min(degrees) if degrees else None

    def validate(self):
        """Raise InvalidParams / Divergent when the series is not defined"""
        m = self.terminating_degree()
        for b in self.lower:
            if b <= 0 and b == math.floor(b):
                if m is None or m > -b:
                    raise InvalidParams(f"lower parameter {b} is a pole of the series")
        if m is not None or self.z == 0:
            return
        p, q = len(self.upper), len(self.lower)
        if p > q + 1:
            raise Divergent(f"{p}F{q} has zero radius of convergence")
        if p == q + 1 and abs(self.z) >= 1:
            raise Divergent(f"{p}F{q} diverges at |z|={abs(self.z)} >= 1")


@dataclass(frozen=True)
class LTPoint:
    """Laplace variable s > 1"""
    s: float

    def __post_init__(self):
        if not self.s > 1:
            raise InvalidParams(f"Laplace variable must exceed 1, got s={self.s}")


@dataclass
class FunctionId:
    """A family plus its named parameters"""
    family: Family
    params: Dict[str, float] = field(default_factory=dict)
    name: Optional[str] = None

    @property
    def rational(self) -> Optional[RationalAlpha]:
        if 'p' in self.params and 'q' in self.params:
            return RationalAlpha(int(self.params['p']), int(self.params['q']))
        return None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        data = {'family': self.family.value, 'params': dict(self.params)}
        if self.name:
            data['name'] = self.name
        return data


@dataclass
class GridSpec:
    """Abscissa grid for tabulation"""
    x_min: float
    x_max: float
    points: int
    spacing: Spacing = Spacing.LINEAR

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise InvalidParams(f"grid needs x_min < x_max, got {self.x_min} >= {self.x_max}")
        if self.points < 2:
            raise InvalidParams(f"grid needs at least 2 points, got {self.points}")
        if self.spacing is Spacing.LOG and not self.x_min > 0:
            raise InvalidParams("log spacing requires x_min > 0")

    def abscissae(self) -> List[float]:
        """Grid points in increasing order"""
        if self.spacing is Spacing.LOG:
            xs = np.geomspace(self.x_min, self.x_max, self.points)
        else:
            xs = np.linspace(self.x_min, self.x_max, self.points)
        return [float(x) for x in xs]


@dataclass
class CheckCase:
    """Result line of a check suite"""
    id: str
    reference: str
    max_rel_err: float
    tol: float
    status: CaseStatus
    note: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        data = {
            'id': self.id,
            'paper_ref': self.reference,
            'max_rel_err': self.max_rel_err,
            'tol': self.tol,
            'status': self.status.value,
        }
        if self.note:
            data['note'] = self.note
        return data


@dataclass
class CheckReport:
    """All cases of one suite run"""
    suite: str
    cases: List[CheckCase] = field(default_factory=list)

    @property
    def failures(self) -> List[CheckCase]:
        return [c for c in self.cases if c.status in (CaseStatus.FAIL, CaseStatus.ERROR)]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {'suite': self.suite, 'cases': [c.to_dict() for c in self.cases]}


# Parameters each family needs; rational families accept p, q in place of alpha
FAMILY_PARAMS = {
    Family.ML: ('alpha', 'beta'),
    Family.IML: ('alpha', 'beta'),
    Family.WHITTAKER_M: ('kappa', 'mu'),
    Family.WHITTAKER_W: ('kappa', 'mu'),
    Family.MI: ('kappa', 'mu'),
    Family.WI: ('kappa', 'mu'),
    Family.MI_TAIL: ('kappa', 'mu'),
    Family.WI_TAIL: ('kappa', 'mu'),
    Family.WRIGHT: ('alpha', 'beta'),
    Family.IWRIGHT: ('alpha', 'beta'),
    Family.MAINARDI_F: ('alpha',),
    Family.MAINARDI_M: ('alpha',),
    Family.IMAINARDI_F: ('alpha',),
    Family.IMAINARDI_M: ('alpha',),
    Family.LT_ML: ('alpha', 'beta'),
    Family.LT_IML: ('alpha', 'beta'),
}

# Elementary functions and the extra parameter each one takes
ELEMENTARY_PARAMS = {
    'gamma': (), 'lngamma': (), 'rgamma': (),
    'gammainc_lower': ('a',), 'gammainc_upper': ('a',),
    'e1': (), 'ei': (),
    'Si': (), 'si': (), 'Ci': (),
    'Shi': (), 'Chi': (),
    'erf': (), 'erfc': (), 'erfi': (), 'dawson': (),
    'I': ('nu',), 'K': ('nu',),
    'L0': (), 'L1': (),
    'Ai': (), 'Aip': (),
    'laguerre': ('nu',),
}


class SchemaValidator:
    """Utility class for validating request schemas"""

    @staticmethod
    def validate_function_id(fn: FunctionId) -> bool:
        """Check that the named parameters match the family's arity"""
        if fn.family is Family.ELEMENTARY:
            if fn.name not in ELEMENTARY_PARAMS:
                raise InvalidParams(f"unknown elementary function {fn.name!r}")
            missing = [k for k in ELEMENTARY_PARAMS[fn.name] if k not in fn.params]
        else:
            required = FAMILY_PARAMS[fn.family]
            have_rational = 'p' in fn.params and 'q' in fn.params
            missing = [k for k in required
                       if k not in fn.params and not (k == 'alpha' and have_rational)]
            if have_rational:
                for key in ('p', 'q'):
                    if fn.params[key] != int(fn.params[key]):
                        raise InvalidParams(f"--{key} must be an integer")
                _ = fn.rational
        if missing:
            raise InvalidParams(f"{fn.family.value} requires {', '.join('--' + m for m in missing)}")
        return True

    @staticmethod
    def validate_finite(name: str, value: float) -> float:
        """Reject NaN and infinite inputs"""
        if not math.isfinite(value):
            raise InvalidParams(f"{name} must be finite, got {value}")
        return value
