"""
Тесты специальных функций: Γ, M(α, β, z), H_ν(z)
"""

import math

import mpmath
import numpy as np
import pytest
from numpy.polynomial import hermite as hermite_poly

from src.core.exceptions import ParameterDomainError, PoleError
from src.specfun import AxisValue, b0_constant, gamma, hermite_h, kummer_m


class TestGamma:
    """Гамма-функция и константа B₀"""

    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    def test_one_third(self):
        """Γ(1/3) против mpmath"""
        assert gamma(1.0 / 3.0) == pytest.approx(float(mpmath.gamma(mpmath.mpf(1) / 3)), rel=1e-12)

    def test_negative_non_integer(self):
        """Формула отражения: Γ(−1/2) = −2√π"""
        assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-12)

    @pytest.mark.parametrize("x", [0.0, -1.0, -3.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            gamma(x)

    def test_recurrence(self):
        """Γ(x + 1) = x·Γ(x) вне полюсов"""
        for x in np.linspace(-9.75, 9.75, 40):
            x = float(x)
            assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)

    def test_b0_value(self):
        """B₀ = Γ(1/3)/(6·∛3·Γ(2/3)) ≈ 0.2286202"""
        assert b0_constant() == pytest.approx(0.2286202, abs=5e-7)


class TestKummer:
    """Функция Куммера M(α, β, z)"""

    def test_zero_argument(self):
        assert kummer_m(0.7, 1.3, 0.0) == 1.0

    @pytest.mark.parametrize("z", [-5.0, 0.3, 10.0, 40.0])
    def test_exponential(self, z):
        """M(1, 1, z) = e^z, включая ветвь z > 30"""
        assert kummer_m(1.0, 1.0, z) == pytest.approx(math.exp(z), rel=1e-10)

    def test_linear_terminating(self):
        """M(−1, 1/2, 4) = 1 − 4/(1/2)"""
        assert kummer_m(-1.0, 0.5, 4.0) == pytest.approx(-7.0, rel=1e-14)

    def test_terminating_series(self):
        """M(−2, 1/2, z) = 1 − 4z + 4z²/3"""
        z = 1.7
        assert kummer_m(-2.0, 0.5, z) == pytest.approx(1.0 - 4.0 * z + 4.0 * z * z / 3.0, rel=1e-12)

    @pytest.mark.parametrize("alpha,beta,z", [(0.3, 1.7, -20.0), (-3.5, 0.5, 25.0), (2.2, 1.5, -45.0)])
    def test_against_mpmath(self, alpha, beta, z):
        assert kummer_m(alpha, beta, z) == pytest.approx(float(mpmath.hyp1f1(alpha, beta, z)), rel=1e-10)

    @pytest.mark.parametrize("beta", [0.0, -2.0])
    def test_beta_pole(self, beta):
        with pytest.raises(PoleError):
            kummer_m(0.5, beta, 1.0)

    def test_argument_out_of_domain(self):
        with pytest.raises(ParameterDomainError):
            kummer_m(0.5, 1.5, 800.0)


class TestHermite:
    """Функция Эрмита произвольного порядка"""

    @pytest.mark.parametrize("nu", range(7))
    def test_integer_orders_are_polynomials(self, nu):
        """Целые ν дают полиномы Эрмита, в том числе в асимптотической области z > 6"""
        z = np.linspace(-5.0, 8.0, 53)
        ref = hermite_poly.hermval(z, [0] * nu + [1])
        got = np.array([hermite_h(nu, float(v)).real for v in z])
        assert np.max(np.abs(got - ref) / np.maximum(np.abs(ref), 1.0)) < 1e-10

    @pytest.mark.parametrize("nu", [0.3, 0.5, 1.7, 2.5])
    def test_recurrence(self, nu):
        """H_{ν+1}(z) = 2z·H_ν(z) − 2ν·H_{ν−1}(z)"""
        for z in np.linspace(-4.0, 4.0, 17):
            z = float(z)
            h_next = hermite_h(nu + 1, z).real
            h = hermite_h(nu, z).real
            h_prev = hermite_h(nu - 1, z).real
            scale = abs(h_next) + abs(2 * z * h) + abs(2 * nu * h_prev)
            assert abs(h_next - 2 * z * h + 2 * nu * h_prev) / scale < 1e-8

    @pytest.mark.parametrize("nu,z", [(1.3, -3.0), (2.7, 0.5), (0.4, 4.0), (3.5, 7.5), (-0.6, 2.0)])
    def test_real_axis_against_mpmath(self, nu, z):
        ref = float(mpmath.hermite(nu, z))
        assert hermite_h(nu, z).real == pytest.approx(ref, rel=1e-10)

    def test_value_at_zero(self):
        """H_ν(0) = 2^ν·√π / Γ((1 − ν)/2)"""
        assert hermite_h(0.5, 0.0).real == pytest.approx(2 ** 0.5 * math.sqrt(math.pi) / math.gamma(0.25), rel=1e-12)

    def test_conjugate_symmetry(self):
        y = 1.9
        assert hermite_h(1.3, AxisValue.imaginary(-y)) == pytest.approx(hermite_h(1.3, AxisValue.imaginary(y)).conjugate(), rel=1e-12)

    def test_imaginary_axis_polynomials(self):
        """H_1(iy) = 2iy, H_2(iy) = −4y² − 2"""
        y = 1.3
        assert hermite_h(1, AxisValue.imaginary(y)) == pytest.approx(complex(0.0, 2.0 * y), abs=1e-12)
        assert hermite_h(2, AxisValue.imaginary(y)) == pytest.approx(complex(-4.0 * y * y - 2.0, 0.0), abs=1e-12)

    @pytest.mark.parametrize("nu,y", [(1.7, 0.8), (2.5, -3.0), (0.3, 5.0)])
    def test_imaginary_axis_against_mpmath(self, nu, y):
        ref = complex(mpmath.hermite(nu, mpmath.mpc(0, y)))
        got = hermite_h(nu, AxisValue.imaginary(y))
        assert abs(got - ref) <= 1e-10 * abs(ref)

    def test_float_argument_is_real_axis(self):
        assert hermite_h(2.5, 1.1) == hermite_h(2.5, AxisValue.real(1.1))


class TestAxisValue:
    """Аргумент на вещественной и мнимой оси"""

    def test_squared_sign(self):
        assert AxisValue.real(2.0).squared() == 4.0
        assert AxisValue.imaginary(2.0).squared() == -4.0

    def test_value(self):
        assert AxisValue.imaginary(1.5).value == complex(0.0, 1.5)

    def test_non_finite_rejected(self):
        with pytest.raises(ParameterDomainError):
            AxisValue.real(math.inf)
