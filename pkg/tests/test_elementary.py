import math

import pytest

from utils.elementary import (
    EULER, SQRT_PI, airy_ai, bessel_i, bessel_k, cin, dawson, e1, ei, ein, erf, erfc, erfi, gamma, hyp_integrals,
    incomplete_gamma, laguerre_nu, ln_gamma, ln_gamma_sign, lower_gamma, rgamma, struve_l, trig_integrals,
    upper_gamma,
)
from utils.errors import DomainError, InvalidParams, PoleError, RangeOverflow
from utils.quadrature import integrate
from utils.schemas import QuadControl


class TestGamma:
    def test_half(self):
        assert gamma(0.5) == pytest.approx(SQRT_PI, rel=1e-14)

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 20])
    def test_factorials(self, n):
        assert gamma(n + 1.0) == pytest.approx(math.factorial(n), rel=1e-13)

    def test_reflection(self):
        x = -4.0 / 3.0
        assert gamma(x) * gamma(1.0 - x) == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-13)

    def test_rgamma_vanishes_at_poles(self):
        assert rgamma(-3.0) == 0.0
        assert rgamma(0.0) == 0.0

    def test_pole(self):
        with pytest.raises(PoleError):
            gamma(-3.0)

    def test_overflow(self):
        with pytest.raises(RangeOverflow):
            gamma(171.7)

    def test_ln_gamma_needs_positive_argument(self):
        with pytest.raises(DomainError):
            ln_gamma(-1.5)

    @pytest.mark.parametrize("x,sign", [(-0.5, -1), (-1.5, 1), (2.5, 1)])
    def test_ln_gamma_sign(self, x, sign):
        res = ln_gamma_sign(x)
        assert res.sign == sign
        assert res.value == pytest.approx(math.log(abs(gamma(x))), abs=1e-13)


class TestIncompleteGamma:
    @pytest.mark.parametrize("x", [0.3, 2.0, 7.0])
    def test_order_one(self, x):
        assert lower_gamma(1.0, x) == pytest.approx(-math.expm1(-x), rel=1e-13)
        assert upper_gamma(1.0, x) == pytest.approx(math.exp(-x), rel=1e-13)

    @pytest.mark.parametrize("a,x", [(2.5, 1.0), (2.5, 5.0), (0.3, 0.1), (7.0, 20.0)])
    def test_halves_sum_to_gamma(self, a, x):
        assert lower_gamma(a, x) + upper_gamma(a, x) == pytest.approx(gamma(a), rel=1e-13)

    def test_zero_argument(self):
        assert lower_gamma(2.0, 0.0) == 0.0
        assert upper_gamma(2.0, 0.0) == pytest.approx(1.0, rel=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            incomplete_gamma("lower", 0.0, 1.0)
        with pytest.raises(DomainError):
            incomplete_gamma("upper", 1.0, -1.0)
        with pytest.raises(InvalidParams):
            incomplete_gamma("middle", 1.0, 1.0)


class TestExponentialIntegrals:
    @pytest.mark.parametrize("x,expected", [
        (1.0, 0.21938393439552027368),
        (2.0, 0.04890051070806111957),
    ])
    def test_e1(self, x, expected):
        assert e1(x).value == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("x,expected", [
        (1.0, 1.89511781635593675547),
        (2.0, 4.95423435600189016338),
    ])
    def test_ei(self, x, expected):
        assert ei(x).value == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("x", [0.5, 3.0])
    def test_ein_links_e1(self, x):
        assert ein(x).value == pytest.approx(EULER + math.log(x) + e1(x).value, rel=1e-13)

    def test_e1_domain(self):
        with pytest.raises(DomainError):
            e1(0.0)


class TestTrigonometricIntegrals:
    @pytest.mark.parametrize("x,si,ci", [
        (1.0, 0.94608307036718301494, 0.33740392290096813466),
        (10.0, 1.65834759421887404934, -0.04545643300445537263),
    ])
    def test_values(self, x, si, ci):
        assert trig_integrals("Si", x).value == pytest.approx(si, rel=1e-13)
        assert trig_integrals("Ci", x).value == pytest.approx(ci, rel=1e-12)

    @pytest.mark.parametrize("x", [2.0, 6.0])
    def test_small_si(self, x):
        assert trig_integrals("si", x).value == pytest.approx(trig_integrals("Si", x).value - math.pi / 2, abs=1e-14)

    @pytest.mark.parametrize("x", [3.0, 6.0])
    def test_cin(self, x):
        expected = EULER + math.log(x) - trig_integrals("Ci", x).value
        assert cin(x).value == pytest.approx(expected, rel=1e-12)

    def test_ci_domain(self):
        with pytest.raises(DomainError):
            trig_integrals("Ci", 0.0)

    @pytest.mark.parametrize("x", [0.5, 3.0, 12.0, 40.0])
    def test_against_scipy(self, x):
        special = pytest.importorskip("scipy.special")
        si, ci = special.sici(x)
        assert trig_integrals("Si", x).value == pytest.approx(si, rel=1e-12)
        assert trig_integrals("Ci", x).value == pytest.approx(ci, rel=1e-10, abs=1e-14)


class TestHyperbolicIntegrals:
    def test_values(self):
        assert hyp_integrals("Shi", 1.0).value == pytest.approx(1.05725087537572851, rel=1e-14)
        assert hyp_integrals("Chi", 1.0).value == pytest.approx(0.83786694098020824, rel=1e-14)

    @pytest.mark.parametrize("x", [0.5, 2.0, 6.0])
    def test_sum_is_ei(self, x):
        total = hyp_integrals("Shi", x).value + hyp_integrals("Chi", x).value
        assert total == pytest.approx(ei(x).value, rel=1e-13)


class TestErrorFunctions:
    def test_values(self):
        assert erf(1.0).value == pytest.approx(0.84270079294971486934, rel=1e-14)
        assert erfc(3.0).value == pytest.approx(2.20904969985854413727e-5, rel=1e-12)
        assert erfi(1.0).value == pytest.approx(1.65042575879754287602, rel=1e-14)
        assert dawson(1.0).value == pytest.approx(0.53807950691276841914, rel=1e-14)

    @pytest.mark.parametrize("x", [-1.2, 0.4, 2.4, 2.6, 5.0])
    def test_complement(self, x):
        assert erf(x).value + erfc(x).value == pytest.approx(1.0, rel=1e-14)

    def test_erfi_overflow(self):
        with pytest.raises(RangeOverflow):
            erfi(40.0)

    def test_dawson_asymptote(self):
        x = 30.0
        assert dawson(x).value == pytest.approx(0.5 / x * (1 + 1 / (2 * x * x) + 3 / (4 * x ** 4)), rel=1e-8)


class TestBessel:
    def test_i0(self):
        assert bessel_i(0.0, 1.0).value == pytest.approx(1.26606587775200833560, rel=1e-14)

    @pytest.mark.parametrize("x", [0.5, 1.0, 3.0, 8.0])
    def test_k_half_closed_form(self, x):
        expected = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
        assert bessel_k(0.5, x).value == pytest.approx(expected, rel=1e-11)

    def test_k0_integer_order(self):
        assert bessel_k(0.0, 1.0).value == pytest.approx(0.42102443824070833334, rel=1e-8)

    def test_i_half_closed_form(self):
        x = 2.0
        assert bessel_i(0.5, x).value == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sinh(x), rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            bessel_k(1.0, 0.0)


class TestStruve:
    @pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
    def test_l0_integral_form(self, x):
        oracle = integrate(lambda t: math.sinh(x * math.cos(t)), 0.0, math.pi / 2,
                           QuadControl(abs_tol=1e-15, rel_tol=1e-13)).value * 2 / math.pi
        assert struve_l(0, x).value == pytest.approx(oracle, rel=1e-11)

    def test_order(self):
        with pytest.raises(InvalidParams):
            struve_l(2, 1.0)


class TestAiry:
    def test_origin(self):
        assert airy_ai("Ai", 0.0).value == pytest.approx(0.35502805388781723926, rel=1e-14)
        assert airy_ai("Ai_prime", 0.0).value == pytest.approx(-0.25881940379280679840, rel=1e-14)

    def test_one(self):
        assert airy_ai("Ai", 1.0).value == pytest.approx(0.13529241631288141552, rel=1e-12)

    def test_range(self):
        with pytest.raises(DomainError):
            airy_ai("Ai", 9.0)

    def test_decaying_side(self):
        res = airy_ai("Ai", 8.0)
        assert res.value == pytest.approx(4.6922e-08, rel=1e-4)
        assert res.est_error < 1e-10 * res.value

    @pytest.mark.parametrize("x", [3.0, 6.0, 8.0])
    def test_decaying_side_mpmath(self, x):
        mpmath = pytest.importorskip("mpmath")
        assert airy_ai("Ai", x).value == pytest.approx(float(mpmath.airyai(x)), rel=1e-10)
        assert airy_ai("Ai_prime", x).value == pytest.approx(float(mpmath.airyai(x, derivative=1)), rel=1e-10)

    @pytest.mark.parametrize("x", [-8.0, -4.0])
    def test_oscillating_side_mpmath(self, x):
        mpmath = pytest.importorskip("mpmath")
        assert airy_ai("Ai", x).value == pytest.approx(float(mpmath.airyai(x)), abs=1e-8)


@pytest.mark.parametrize("x", [0.5, 2.0, 7.0])
def test_laguerre_polynomial(x):
    assert laguerre_nu(2.0, x).value == pytest.approx(1 - 2 * x + x * x / 2, rel=1e-13, abs=1e-14)
