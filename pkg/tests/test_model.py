"""
Тесты модели: параметры, потенциал, отображения энергия ↔ a
"""

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.core.exceptions import ParameterDomainError
from src.model import (
    Branch,
    PhysParams,
    a_of_energy,
    energy_of_a,
    epsilon_of_energy,
    outer_turning_point,
    potential,
    potential_minimum,
    sqrt_term_coefficient,
)


class TestPhysParams:
    """Валидация параметров"""

    def test_defaults(self):
        p = PhysParams()
        assert (p.m, p.hbar, p.v0, p.v1, p.v2) == (1.0, 1.0, 0.0, 1.0, 0.0)

    @pytest.mark.parametrize("field", ["m", "hbar"])
    def test_positive_constants(self, field):
        with pytest.raises(ValidationError):
            PhysParams(**{field: 0.0})

    def test_non_finite_rejected(self):
        with pytest.raises(ValidationError):
            PhysParams(v0=float("inf"))

    def test_frozen(self):
        p = PhysParams()
        with pytest.raises(ValidationError):
            p.v1 = 2.0

    def test_coulomb_cancellation(self):
        """При V2 = 2mV1²/ħ² член x^{−1/2} исчезает"""
        p = PhysParams(m=1.5, hbar=0.8, v1=1.2).with_coulomb_cancellation()
        assert sqrt_term_coefficient(p) == pytest.approx(0.0, abs=1e-12)

    def test_headline_resets_v2(self):
        assert PhysParams(v2=0.7).headline().v2 == 0.0

    def test_require_well(self):
        with pytest.raises(ParameterDomainError):
            PhysParams(v1=-1.0).require_well()

    def test_branch_phase(self):
        assert Branch.MINUS.phase == 1
        assert Branch.PLUS.phase == pytest.approx(complex(-0.5, -np.sqrt(3) / 2), abs=1e-15)


class TestPotential:
    """V(x)"""

    def test_reference_point(self, unit_params):
        """V(4) = 5/512 + 1/8 − 8"""
        assert potential(unit_params, 4.0) == pytest.approx(-7.865234375, rel=1e-14)

    def test_vectorized_matches_scalar(self, unit_params):
        xs = np.array([0.1, 0.5, 2.0, 7.0])
        values = potential(unit_params, xs)
        assert isinstance(values, np.ndarray)
        assert values == pytest.approx([potential(unit_params, float(x)) for x in xs], rel=1e-15)

    @pytest.mark.parametrize("x", [0.0, -1.0])
    def test_non_positive_x(self, unit_params, x):
        with pytest.raises(ParameterDomainError):
            potential(unit_params, x)

    def test_any_sign_of_v1_allowed(self):
        assert potential(PhysParams(v1=-1.0), 1.0) > 0

    def test_limits(self, unit_params):
        """+∞ у нуля и V0 на бесконечности"""
        assert potential(unit_params, 1e-6) > 1e10
        assert potential(unit_params, 1e12) == pytest.approx(0.0, abs=1e-4)

    def test_minimum(self, unit_params):
        x_min, v_min = potential_minimum(unit_params)
        assert 0.2 < x_min < 0.33
        assert -21.6 < v_min < -21.45
        assert v_min <= potential(unit_params, 0.99 * x_min)
        assert v_min <= potential(unit_params, 1.01 * x_min)

    def test_outer_turning_point(self, unit_params):
        x_min, _ = potential_minimum(unit_params)
        tp = outer_turning_point(unit_params, -15.0)
        assert tp > x_min
        assert potential(unit_params, tp) == pytest.approx(-15.0, abs=1e-9)

    def test_turning_point_requires_bound_energy(self, unit_params):
        with pytest.raises(ParameterDomainError):
            outer_turning_point(unit_params, 1.0)
        with pytest.raises(ParameterDomainError):
            outer_turning_point(unit_params, -30.0)


class TestEnergyMaps:
    """ε(E), a(E), E(a)"""

    def test_epsilon_sign(self, unit_params):
        assert epsilon_of_energy(unit_params, -2.0, Branch.MINUS) == pytest.approx(-4.0)
        assert epsilon_of_energy(unit_params, -2.0, Branch.PLUS) == pytest.approx(4.0)

    def test_a_sign_by_branch(self, unit_params):
        assert a_of_energy(unit_params, -15.0, Branch.MINUS) > 0
        assert a_of_energy(unit_params, -15.0, Branch.PLUS) < 0

    @pytest.mark.parametrize("energy", [0.0, 1.0])
    def test_energy_above_v0(self, unit_params, energy):
        with pytest.raises(ParameterDomainError):
            epsilon_of_energy(unit_params, energy, Branch.MINUS)

    def test_half_integer_root_energy(self, unit_params):
        """E(3/2) = −32/3^{2/3}"""
        assert energy_of_a(unit_params, 1.5) == pytest.approx(-32.0 / 3.0 ** (2.0 / 3.0), rel=1e-13)

    def test_energy_increasing_in_a(self, unit_params):
        energies = [energy_of_a(unit_params, a) for a in (0.6, 1.5, 4.0, 20.0, 1e4)]
        assert all(b > a for a, b in zip(energies, energies[1:]))
        assert energies[-1] < unit_params.v0

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(
        a=st.floats(min_value=0.51, max_value=50.0),
        m=st.floats(min_value=0.5, max_value=2.0),
        hbar=st.floats(min_value=0.5, max_value=2.0),
        v1=st.floats(min_value=0.5, max_value=2.0),
    )
    def test_round_trip(self, a, m, hbar, v1):
        """a(E(a)) = a на ветви MINUS"""
        p = PhysParams(m=m, hbar=hbar, v1=v1)
        energy = energy_of_a(p, a)
        assert energy < p.v0
        assert a_of_energy(p, energy, Branch.MINUS) == pytest.approx(a, rel=1e-12)
