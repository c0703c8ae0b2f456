"""
Fixture registry for specint
Tabulated closed forms as (function, parameters, abscissae, tolerance) rows with a verification status
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .elementary import SQRT_PI, rgamma
from .hypergeometric import hyp
from .laplace import lt_iml_reference, lt_ml_reference
from .mittag_leffler import iml_reference
from .schemas import Family, FixtureStatus, FunctionId, LTPoint, MLParams, WhittakerParams, WrightParams
from .whittaker import whittaker_reference
from .wright import integral_mainardi_reference, integral_wright_reference, mainardi_reference, wright_reference

logger = logging.getLogger(__name__)

ML_GRID = (0.1, 0.5, 1.0, 2.0, 4.0)
S_GRID = (2.0, 3.0, 5.0)
WHITTAKER_GRID = (0.5, 1.0, 2.0, 5.0)
WRIGHT_GRID = (0.5, 1.0, 2.0, 4.0)


@dataclass
class FixtureRow:
    """One tabulated closed form checked against the library"""
    id: str
    fn: FunctionId
    reference: str
    closed_form: Callable[[float], float]
    xs: Tuple[float, ...]
    tol: float = 1e-9
    status: FixtureStatus = FixtureStatus.VERIFIED
    note: Optional[str] = None

    @property
    def verified(self) -> bool:
        return self.status is FixtureStatus.VERIFIED


@dataclass
class FixtureRegistry:
    """Rows grouped by check suite"""
    rows: Dict[str, List[FixtureRow]] = field(default_factory=dict)

    def register(self, suite: str, row: FixtureRow):
        if any(r.id == row.id for r in self.rows.get(suite, [])):
            raise ValueError(f"duplicate fixture id {row.id!r} in suite {suite!r}")
        self.rows.setdefault(suite, []).append(row)

    def suite(self, name: str, include_unverified: bool = False) -> List[FixtureRow]:
        """Rows of one suite in registration order"""
        rows = self.rows.get(name, [])
        if include_unverified:
            return list(rows)
        skipped = [r.id for r in rows if not r.verified]
        if skipped:
            logger.warning(f"skipping {len(skipped)} unverified fixtures in {name}: {', '.join(skipped)}")
        return [r for r in rows if r.verified]

    def get(self, row_id: str) -> FixtureRow:
        for rows in self.rows.values():
            for row in rows:
                if row.id == row_id:
                    return row
        raise KeyError(row_id)

    def __len__(self) -> int:
        return sum(len(rows) for rows in self.rows.values())


def _fmt(v: float) -> str:
    for num, den in ((1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (3, 2), (5, 2), (1, 5)):
        if abs(abs(v) - num / den) < 1e-12:
            return f"{'-' if v < 0 else ''}{num}/{den}"
    return f"{v:g}"


def _ml_row(family: Family, alpha: float, beta: float, reference: str, xs=ML_GRID, tol=1e-9) -> FixtureRow:
    params = MLParams(alpha, beta)
    label = "Ei" if family is Family.IML else "E"
    return FixtureRow(
        id=f"{family.value}({_fmt(alpha)},{_fmt(beta)})",
        fn=FunctionId(family, {'alpha': alpha, 'beta': beta}),
        reference=f"{label}_{{{_fmt(alpha)},{_fmt(beta)}}}: {reference}",
        closed_form=lambda x: iml_reference(params, x).value,
        xs=xs,
        tol=tol,
    )


def _lt_row(family: Family, alpha: float, beta: float, reference: str, tol=1e-9) -> FixtureRow:
    params = MLParams(alpha, beta)
    func = lt_iml_reference if family is Family.LT_IML else lt_ml_reference
    return FixtureRow(
        id=f"{family.value}({_fmt(alpha)},{_fmt(beta)})",
        fn=FunctionId(family, {'alpha': alpha, 'beta': beta}),
        reference=reference,
        closed_form=lambda s: func(params, LTPoint(s)).value,
        xs=S_GRID,
        tol=tol,
    )


_WHITTAKER_FAMILIES = {
    "M": Family.WHITTAKER_M,
    "W": Family.WHITTAKER_W,
    "Mi": Family.MI,
    "mi": Family.MI_TAIL,
    "Wi": Family.WI,
    "wi": Family.WI_TAIL,
}


def _whittaker_row(kind: str, kappa: float, mu: float, reference: str, xs=WHITTAKER_GRID,
                   tol=1e-9) -> FixtureRow:
    params = WhittakerParams(kappa, mu)
    family = _WHITTAKER_FAMILIES[kind]
    return FixtureRow(
        id=f"{kind}({_fmt(kappa)},{_fmt(mu)})",
        fn=FunctionId(family, {'kappa': kappa, 'mu': mu}),
        reference=f"{kind}_{{{_fmt(kappa)},{_fmt(mu)}}} = {reference}",
        closed_form=lambda x: whittaker_reference(kind, params, x).value,
        xs=xs,
        tol=tol,
    )


def _wright_row(family: Family, alpha: float, beta: float, reference: str, xs=WRIGHT_GRID,
                tol=1e-9) -> FixtureRow:
    params = WrightParams(alpha, beta)
    func = integral_wright_reference if family is Family.IWRIGHT else wright_reference
    return FixtureRow(
        id=f"{family.value}({_fmt(alpha)},{_fmt(beta)})",
        fn=FunctionId(family, {'alpha': alpha, 'beta': beta}),
        reference=reference,
        closed_form=lambda x: func(params, x).value,
        xs=xs,
        tol=tol,
    )


def _mainardi_row(family: Family, p: int, q: int, reference: str, xs=(0.5, 1.0, 1.5, 2.0),
                  tol=1e-9) -> FixtureRow:
    alpha = p / q
    if family in (Family.MAINARDI_F, Family.MAINARDI_M):
        kind = "F" if family is Family.MAINARDI_F else "M"
        func = mainardi_reference
    else:
        kind = "Fi" if family is Family.IMAINARDI_F else "Mi"
        func = integral_mainardi_reference
    return FixtureRow(
        id=f"{family.value}({p}/{q})",
        fn=FunctionId(family, {'p': p, 'q': q}),
        reference=reference,
        closed_form=lambda x: func(kind, alpha, x).value,
        xs=xs,
        tol=tol,
    )


def _unverified(row: FixtureRow, printed: str, closed_form: Callable[[float], float], note: str) -> FixtureRow:
    row.id += ":printed"
    row.reference = printed
    row.closed_form = closed_form
    row.status = FixtureStatus.UNVERIFIED
    row.note = note
    return row


def _tables(registry: FixtureRegistry):
    add = registry.register
    iml = Family.IML
    add("tables", _ml_row(iml, 1.0, 1.0, "-γ - ln x + Chi(x) + Shi(x)"))
    add("tables", _ml_row(iml, 2.0, 1.0, "-2γ - ln x + 2 Chi(√x)"))
    add("tables", _ml_row(iml, 2.0, 2.0, "2 - 2γ - ln x - 2 sinh(√x)/√x + 2 Chi(√x)"))
    add("tables", _ml_row(iml, 0.5, 1.0, "-γ/2 - ln x + Ei(x²)/2 + (2x/√π)₂F₂(1/2,1;3/2,3/2;x²)"))
    add("tables", _ml_row(iml, 0.5, 0.5, "(x²/√π)₂F₂(1,1;3/2,2;x²) + e^{x²}F(x)"))
    add("tables", _ml_row(iml, 0.5, 2.0, "even Ei/exp part + (4x/(3√π))₂F₂(1/2,1;3/2,5/2;x²)"))
    add("tables", _ml_row(iml, 0.5, 3.0, "even Ei/exp part + (8x/(15√π))₂F₂(1/2,1;3/2,7/2;x²)",
                          xs=(0.5, 1.0, 2.0, 4.0)))
    add("tables", _ml_row(iml, 0.5, 4.0, "even Ei/exp part + (16x/(105√π))₂F₂(1/2,1;3/2,9/2;x²)",
                          xs=(0.5, 1.0, 2.0, 4.0)))
    add("tables", _ml_row(iml, 1.0 / 3.0, 0.5, "three ₂F₂ blocks in x³"))
    add("tables", _ml_row(iml, 1.0 / 3.0, 1.5, "three ₂F₂ blocks in x³"))
    add("tables", _ml_row(iml, 1.0, 0.5, "(2x/√π)₂F₂(1,1;3/2,2;x)"))
    add("tables", _ml_row(iml, 1.0, 1.5, "(4x/(3√π))₂F₂(1,1;2,5/2;x)"))
    add("tables", _ml_row(iml, 1.0, 2.5, "x/Γ(β+1)₂F₂(1,1;2,1+β;x)"))
    add("tables", _ml_row(iml, 1.5, 0.5, "(4x²/(15√π))₂F₄(1,1;7/6,3/2,11/6,2;x²/27) + x₁F₃(1/2;2/3,4/3,3/2;x²/27)"))
    add("tables", _ml_row(iml, 1.5, 1.0, "(4x/(3√π))₂F₄(1/2,1;5/6,7/6,3/2,3/2;x²/27) + (x²/12)₂F₄(...)"))
    add("tables", _ml_row(iml, 1.5, 1.5, "(x/2)₁F₃(1/2;4/3,3/2,5/3;x²/27) + (8x²/(105√π))₂F₄(...)"))
    add("tables", _ml_row(iml, 1.5, 2.0, "(8x/(15√π))₂F₄(1/2,1;...) + (x²/48)₂F₄(1,1;5/3,2,2,7/3;x²/27)"))
    add("tables", _ml_row(iml, 2.0, 0.25, "(16x/(5Γ(1/4)))₂F₃(1,1;9/8,13/8,2;x/4)"))
    add("tables", _ml_row(iml, 2.0, 1.0 / 3.0, "(9x/(4Γ(1/3)))₂F₃(1,1;7/6,5/3,2;x/4)"))
    add("tables", _ml_row(iml, 2.0, 0.5, "(4x/(3√π))₂F₃(1,1;5/4,7/4,2;x/4)"))
    add("tables", _ml_row(iml, 3.0, 1.5, "x/Γ(β+3)₂F₄(1,1;2,β/3+1,(β+4)/3,(β+5)/3;x/27)"))
    add("tables", _ml_row(iml, 4.0, 1.0, "(x/24)₂F₅(1,1;5/4,3/2,7/4,2,2;x/256)"))
    add("tables", _ml_row(iml, 5.0, 1.0, "(x/120)₂F₆(1,1;6/5,7/5,8/5,9/5,2,2;x/3125)"))

    add("tables", _unverified(
        _ml_row(iml, 1.5, 0.5, ""),
        "(4x²/(15√π))₂F₄(1,1;7/6,3/2,11/6,2;x²/27) + (x/48)₁F₃(1/2;2/3,4/3,3/2;x²/27)",
        lambda x: (4.0 * x * x / (15.0 * SQRT_PI) * hyp([1.0, 1.0], [7.0 / 6.0, 1.5, 11.0 / 6.0, 2.0], x * x / 27.0)
                   + x / 48.0 * hyp([0.5], [2.0 / 3.0, 4.0 / 3.0, 1.5], x * x / 27.0)),
        "printed with x/48 in front of the ₁F₃ term; the series gives x"))
    add("tables", _unverified(
        _ml_row(iml, 2.0, 0.25, ""),
        "(16x/(5Γ(1/4)))₂F₃(1,1;9/8,11/8,2;x/4)",
        lambda x: 16.0 * x * rgamma(0.25) / 5.0 * hyp([1.0, 1.0], [9.0 / 8.0, 11.0 / 8.0, 2.0], x / 4.0),
        "printed with lower parameter 11/8; the series gives 13/8"))
    add("tables", _unverified(
        _ml_row(iml, 2.0, 0.5, ""),
        "(9x/(3√π))₂F₃(1,1;5/4,7/4,2;x/4)",
        lambda x: 9.0 * x / (3.0 * SQRT_PI) * hyp([1.0, 1.0], [1.25, 1.75, 2.0], x / 4.0),
        "printed with 9x/(3√π); the series gives 4x/(3√π)"))

    whittaker = [
        ("M", 0.0, 0.5, "2 sinh(x/2)", 1e-12),
        ("M", 0.5, 0.0, "√x e^{-x/2}", 1e-12),
        ("M", -0.25, 0.0, "e^{-x/2}√x L_{-3/4}(x)", 1e-11),
        ("M", -0.25, 0.25, "(√π/2)e^{x/2}x^{1/4}erf(√x)", 1e-11),
        ("W", 0.0, 0.5, "e^{-x/2}", 1e-12),
        ("W", -0.5, 0.0, "√x e^{x/2}E₁(x)", 1e-7),
        ("W", 0.0, 1.5, "e^{-x/2}(1 + 2/x)", 1e-9),
        ("W", -0.5, 1.0, "x^{-1/2}e^{-x/2}", 1e-12),
        ("W", 2.0, 0.5, "x(x-2)e^{-x/2}", 1e-12),
        ("W", 4.0, 0.5, "e^{-x/2}x(x³ - 12x² + 36x - 24)", 1e-11),
        ("W", 4.0, 1.5, "e^{-x/2}x²(x² - 10x + 20)", 1e-11),
        ("W", 1.5, 0.0, "e^{-x/2}(x^{3/2} - x^{1/2})", 1e-12),
        ("Mi", 0.0, 0.5, "2 Shi(x/2)", 1e-9),
        ("Mi", 0.5, 0.0, "√(2π) erf(√(x/2))", 1e-9),
        ("Mi", -0.5, 0.0, "√(2π) erfi(√(x/2))", 1e-9),
        ("Mi", 2.0, 0.5, "x e^{-x/2}", 1e-9),
        ("Mi", 0.0, 1.5, "24 sinh(x/2)/x - 12", 1e-9),
        ("Mi", 1.0, 0.5, "2(1 - e^{-x/2})", 1e-9),
        ("Mi", 2.0, 1.5, "4 - 2(2+x)e^{-x/2}", 1e-9),
        ("mi", 0.5, 0.0, "√(2π) erfc(√(x/2))", 1e-8),
        ("mi", 1.0, 0.5, "2e^{-x/2}", 1e-8),
        ("mi", 2.0, 0.5, "-x e^{-x/2}", 1e-8),
        ("mi", 1.5, 0.0, "-2√x e^{-x/2}", 1e-8),
        ("mi", 4.0, 1.5, "(1/10)[8 + (x-2)²x]e^{-x/2}", 1e-8),
        ("Wi", 0.5, 0.0, "√(2π) erf(√(x/2))", 1e-11),
        ("Wi", 1.0, 0.5, "2(1 - e^{-x/2})", 1e-11),
        ("Wi", 1.0, -0.5, "2(1 - e^{-x/2})", 1e-11),
        ("Wi", 2.0, 1.5, "4 - 2(2+x)e^{-x/2}", 1e-11),
        ("Wi", 2.0, 0.5, "-2x e^{-x/2}", 1e-11),
        ("Wi", 3.0, 2.5, "16 - 2(8 + 4x + x²)e^{-x/2}", 1e-11),
        ("Wi", 4.0, 0.5, "-2x(12 - 6x + x²)e^{-x/2}", 1e-10),
        ("Wi", 4.0, 1.5, "16 - 2(8 + x(x-2)²)e^{-x/2}", 1e-10),
        ("Wi", 4.0, 2.5, "-2x³e^{-x/2}", 1e-10),
        ("Wi", 0.25, 0.25, "2^{1/4}γ(1/4, x/2)", 1e-11),
        ("wi", 0.5, 0.0, "√(2π) erfc(√(x/2))", 1e-8),
        ("wi", 0.0, -0.5, "E₁(x/2)", 1e-8),
        ("wi", 1.0, 0.5, "2e^{-x/2}", 1e-8),
        ("wi", 1.5, 0.0, "2√x e^{-x/2}", 1e-8),
        ("wi", 3.0, 0.5, "2[2 + x(x-2)]e^{-x/2}", 1e-8),
        ("wi", 1.0, 2.5, "2x^{-2}[6 + x(6+x)]e^{-x/2}", 1e-8),
        ("wi", 4.0, 1.5, "2[8 + (x-2)²x]e^{-x/2}", 1e-8),
        ("wi", 2.0, 0.5, "2x e^{-x/2}", 1e-8),
    ]
    for kind, kappa, mu, reference, tol in whittaker:
        add("tables", _whittaker_row(kind, kappa, mu, reference, tol=tol))
    add("tables", _unverified(
        _whittaker_row("mi", 2.0, 0.5, ""),
        "mi_{2,1/2} = -e^{-x/2}",
        lambda x: -math.exp(-x / 2.0),
        "printed as -e^{-x/2}; ∫_x^∞ e^{-t/2}(1 - t/2)dt gives -x e^{-x/2}"))

    wright, iwright = Family.WRIGHT, Family.IWRIGHT
    add("tables", _wright_row(wright, 0.0, 2.0, "e^x/Γ(β)"))
    add("tables", _wright_row(wright, 1.0, 1.0, "I₀(2√x)"))
    add("tables", _wright_row(wright, 1.0, 2.5, "x^{(1-β)/2}I_{β-1}(2√x)"))
    add("tables", _wright_row(wright, 1.0, 0.5, "cosh(2√x)/√π"))
    add("tables", _wright_row(wright, 1.0, 1.5, "sinh(2√x)/√(πx)"))
    add("tables", _wright_row(wright, -0.5, 0.5, "e^{-x²/4}/√π", xs=(-2.0, -0.5, 0.5, 2.0)))
    add("tables", _wright_row(wright, -0.5, 1.0, "erf(x/2) + 1", xs=(-2.0, -0.5, 0.5, 2.0)))
    add("tables", _wright_row(wright, 0.5, 1.0, "₀F₂(;β,1/2;x²/4)/Γ(β) + x₀F₂(;β+1/2,3/2;x²/4)/Γ(β+1/2)"))
    add("tables", _wright_row(wright, 2.0, 1.5, "₀F₂(;β/2,(β+1)/2;x/4)/Γ(β)"))
    add("tables", _wright_row(wright, 3.0, 1.0, "₀F₃(;β/3,(β+1)/3,(β+2)/3;x/27)/Γ(β)"))
    add("tables", _wright_row(iwright, 0.0, 2.0, "(-γ - ln x + Chi(x) + Shi(x))/Γ(β)"))
    add("tables", _wright_row(iwright, 1.0, 1.0, "x₂F₃(1,1;2,2,2;x)"))
    add("tables", _wright_row(iwright, 1.0, 2.5, "x/Γ(β+1)₂F₃(1,1;2,2,β+1;x)"))
    add("tables", _wright_row(iwright, 0.5, 1.0,
                              "x²/(4Γ(1+β))₂F₄(1,1;3/2,2,2,β+1;x²/4) + x/Γ(β+1/2)₁F₃(1/2;3/2,3/2,β+1/2;x²/4)"))
    add("tables", _wright_row(iwright, 2.0, 1.0, "(x/2)₂F₄(1,1;3/2,2,2,2;x/4)"))
    add("tables", _wright_row(iwright, 3.0, 1.5, "x/Γ(β+3)₂F₅(1,1;2,2,β/3+1,(β+4)/3,(β+5)/3;x/27)"))
    add("tables", _wright_row(iwright, 4.0, 1.0, "x/Γ(β+4)₂F₆(1,1;2,2,...;x/256)"))
    add("tables", _wright_row(iwright, -1.0, 2.5, "x/Γ(β-1)₃F₂(1,1,2-β;2,2;-x)", xs=(0.1, 0.5, 0.9)))
    add("tables", _unverified(
        _wright_row(iwright, 1.0, 2.5, ""),
        "x₂F₃(1,1;2,2,β+1;x)",
        lambda x: x * hyp([1.0, 1.0], [2.0, 2.0, 3.5], x),
        "printed without the 1/Γ(β+1) prefactor"))

    add("tables", _mainardi_row(Family.MAINARDI_M, 1, 2, "M_{1/2} = e^{-x²/4}/√π", tol=1e-10))
    add("tables", _mainardi_row(Family.MAINARDI_F, 1, 2, "F_{1/2} = x e^{-x²/4}/(2√π)", tol=1e-10))
    add("tables", _mainardi_row(Family.MAINARDI_M, 1, 3, "M_{1/3} = 3^{2/3}Ai(3^{-1/3}x)", tol=1e-10))
    add("tables", _mainardi_row(Family.MAINARDI_F, 1, 3, "F_{1/3} = 3^{-1/3}x Ai(3^{-1/3}x)", tol=1e-10))
    add("tables", _mainardi_row(Family.IMAINARDI_F, 1, 2, "Fi_{1/2} = erf(x/2)/2"))
    add("tables", _mainardi_row(Family.IMAINARDI_F, 1, 3, "Fi_{1/3}: two ₁F₂ terms in x³/27"))
    add("tables", _mainardi_row(Family.IMAINARDI_F, 2, 3, "Fi_{2/3}: two ₂F₂ terms in -4x³/27"))
    add("tables", _mainardi_row(Family.IMAINARDI_M, 1, 2, "Mi_{1/2} = (Chi(y) - Shi(y) - ln y - γ)/(2√π), y = x²/4"))
    add("tables", _mainardi_row(Family.IMAINARDI_M, 1, 3, "Mi_{1/3}: ₂F₃ and ₁F₂ terms in x³/27"))


def _laplace(registry: FixtureRegistry):
    add = registry.register
    lt_ml, lt_iml = Family.LT_ML, Family.LT_IML
    add("laplace", _lt_row(lt_ml, 1.0, 1.0, "L[E_{1,1}] = 1/(s-1)"))
    add("laplace", _lt_row(lt_ml, 2.0, 2.0, "L[E_{2,2}] = √(π/s)e^{1/(4s)}erf(1/(2√s))"))
    add("laplace", _lt_row(lt_ml, 3.0, 1.0, "L[E_{3,1}] = ₁F₂(1;1/3,2/3;1/(27s))/s"))
    add("laplace", _lt_row(lt_iml, 1.0, 1.0, "L[Ei_{1,1}] = -ln(1 - 1/s)/s"))
    add("laplace", _lt_row(lt_iml, 1.0, 0.5, "L[Ei_{1,1/2}] = 2csc⁻¹(√s)/(√π s√(s-1))"))
    add("laplace", _lt_row(lt_iml, 1.0, 1.5, "L[Ei_{1,3/2}] = 4/(√π s)[1 - √(s-1)csc⁻¹(√s)]"))
    add("laplace", _lt_row(lt_iml, 1.0, 0.2, "L[Ei_{1,β}] = ₂F₁(1,1;β+1;1/s)/(Γ(β+1)s²)"))
    for beta in (0.5, 1.0, 1.5, 2.0):
        add("laplace", _lt_row(lt_iml, 1.5, beta, f"L[Ei_{{3/2,{_fmt(beta)}}}]: two hypergeometric terms in 4/(27s²)"))
    add("laplace", _lt_row(lt_iml, 2.0, 1.0, "L[Ei_{2,β}] = ₂F₂(1,1;1+β/2,(β+3)/2;1/(4s))/(Γ(β+2)s²)"))
    add("laplace", _lt_row(lt_iml, 2.0, 3.0, "L[Ei_{2,β}] = ₂F₂(1,1;1+β/2,(β+3)/2;1/(4s))/(Γ(β+2)s²)"))
    add("laplace", _lt_row(lt_iml, 3.0, 0.2, "L[Ei_{3,1/5}] = 125/(66Γ(1/5)s²)₂F₃(1,1;16/15,7/5,26/15;1/(27s))"))
    add("laplace", _lt_row(lt_iml, 4.0, 1.0, "L[Ei_{4,1}] = ₂F₄(1,1;5/4,3/2,7/4,2;1/(256s))/(24s²)"))
    add("laplace", _lt_row(lt_iml, 5.0, 2.0, "L[Ei_{5,β}] = ₂F₅(1,1;1+β/5,...,(β+9)/5;1/(3125s))/(Γ(β+5)s²)"))

    add("laplace", _unverified(
        _lt_row(lt_iml, 1.0, 1.0 / 3.0, ""),
        "L[Ei_{1,1/3}] = 3/(Γ(1/6)s²)₂F₁(1,1;4/3;1/s)",
        lambda s: 3.0 * rgamma(1.0 / 6.0) / (s * s) * hyp([1.0, 1.0], [4.0 / 3.0], 1.0 / s),
        "printed with Γ(1/6); the series gives Γ(1/3)"))
    add("laplace", _unverified(
        _lt_row(lt_iml, 3.0, 0.25, ""),
        "L[Ei_{3,1/4}] = 64/(25Γ(1/4)s²)₂F₃(1,1;13/12,17/12,7/4;1/(27s))",
        lambda s: 64.0 * rgamma(0.25) / (25.0 * s * s)
        * hyp([1.0, 1.0], [13.0 / 12.0, 17.0 / 12.0, 7.0 / 4.0], 1.0 / (27.0 * s)),
        "printed with 64/25; 1/Γ(13/4) gives 64/(45Γ(1/4))"))
    add("laplace", _unverified(
        _lt_row(lt_iml, 4.0, 2.0, ""),
        "L[Ei_{4,β}] = ₂F₄(1,1;1+β/4,(β+5)/3,1+(β+2)/4,1+(β+3)/4;1/(256s))/(Γ(β+4)s²)",
        lambda s: rgamma(6.0) / (s * s) * hyp([1.0, 1.0], [1.5, 7.0 / 3.0, 2.0, 9.0 / 4.0], 1.0 / (256.0 * s)),
        "printed with lower parameter (β+5)/3; the series gives (β+5)/4"))
    add("laplace", _unverified(
        _lt_row(lt_iml, 5.0, 1.0, ""),
        "L[Ei_{5,1}] = ₂F₄(1,1;6/5,7/5,8/5,9/5;1/(3125s))/(120s²)",
        lambda s: hyp([1.0, 1.0], [1.2, 1.4, 1.6, 1.8], 1.0 / (3125.0 * s)) / (120.0 * s * s),
        "printed without the lower parameter 2"))


def build_registry() -> FixtureRegistry:
    """All registered rows, suites 'tables' and 'laplace'"""
    registry = FixtureRegistry()
    _tables(registry)
    _laplace(registry)
    logger.debug(f"fixture registry holds {len(registry)} rows")
    return registry


REGISTRY = build_registry()
