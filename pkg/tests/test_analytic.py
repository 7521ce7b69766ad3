"""
Тесты аналитических решений, таблиц ψ и невязки уравнения Шрёдингера
"""

import numpy as np
import pytest

from src.analytic import (
    WaveProvenance,
    WaveTable,
    bound_wavefunction,
    fundamental_solution,
    general_solution,
    normalize,
    origin_limit,
    overlap,
    schrodinger_residual,
    tabulate,
)
from src.core.exceptions import GridError, InsufficientDecayError, ParameterDomainError, RootValidityError
from src.model import Branch, PhysParams, decay_point, energy_of_a, outer_turning_point

RESIDUAL_GRID = np.linspace(0.05, 5.0, 8001)
PERTURBATION_GRID = np.linspace(0.2, 5.0, 2001)


@pytest.fixture(scope="module")
def ground_table(unit_params, exact_spectrum):
    """Ненормированная ψ_1 на [1e-3, x_decay]"""
    level = exact_spectrum[0]
    grid = np.linspace(1e-3, decay_point(unit_params, level.energy, 12.0), 600)
    return bound_wavefunction(unit_params, level.a, grid)


class TestFundamentalSolution:
    """ψ_± в отдельных точках"""

    def test_minus_branch_is_real(self, unit_params):
        value = fundamental_solution(unit_params, -14.0, Branch.MINUS, 0.8)
        assert value.imag == 0.0

    def test_plus_branch_is_complex(self, unit_params):
        value = fundamental_solution(unit_params, -14.0, Branch.PLUS, 0.8)
        assert isinstance(value, complex)
        assert value.imag != 0.0

    def test_general_solution_combines_branches(self, unit_params):
        minus = fundamental_solution(unit_params, -14.0, Branch.MINUS, 1.2)
        plus = fundamental_solution(unit_params, -14.0, Branch.PLUS, 1.2)
        combined = general_solution(unit_params, -14.0, 2.0, 0.5j, 1.2)
        assert combined == pytest.approx(2.0 * minus + 0.5j * plus, rel=1e-14)

    @pytest.mark.parametrize("x", [0.0, -0.5, 1e-9])
    def test_near_origin_rejected(self, unit_params, x):
        with pytest.raises(ParameterDomainError):
            fundamental_solution(unit_params, -14.0, Branch.MINUS, x)

    def test_energy_above_v0_rejected(self, unit_params):
        with pytest.raises(ParameterDomainError):
            fundamental_solution(unit_params, 0.5, Branch.MINUS, 1.0)

    def test_requires_v2_zero(self):
        with pytest.raises(ParameterDomainError):
            fundamental_solution(PhysParams(v2=0.3), -14.0, Branch.MINUS, 1.0)


class TestOriginLimit:
    """Скобка решения в x → 0"""

    def test_vanishes_at_spurious_root(self, unit_params):
        """a = 1/2: H_1(−1) + 2·H_0(−1) = 0"""
        assert abs(origin_limit(unit_params, energy_of_a(unit_params, 0.5), Branch.MINUS)) < 1e-12

    @pytest.mark.parametrize("x", [0.1, 0.7, 2.5])
    def test_spurious_root_solution_is_zero(self, unit_params, x):
        """При a = 1/2 скобка 2y + 2(1 − 4√x) равна нулю при любом x"""
        energy = energy_of_a(unit_params, 0.5)
        assert abs(fundamental_solution(unit_params, energy, Branch.MINUS, x)) < 1e-10

    def test_vanishes_on_spectrum(self, unit_params, exact_spectrum):
        off = abs(origin_limit(unit_params, -14.0, Branch.MINUS))
        on = abs(origin_limit(unit_params, exact_spectrum[0].energy, Branch.MINUS))
        assert on < 1e-8 * off

    def test_plus_branch_does_not_vanish(self, unit_params, exact_spectrum):
        assert abs(origin_limit(unit_params, exact_spectrum[0].energy, Branch.PLUS)) > 1e-6


class TestBoundWavefunction:
    """Собственные функции ветви MINUS"""

    def test_rejects_non_root(self, unit_params):
        with pytest.raises(RootValidityError):
            bound_wavefunction(unit_params, 1.7, [0.5, 1.0])

    def test_rejects_spurious_root(self, unit_params):
        with pytest.raises(ParameterDomainError):
            bound_wavefunction(unit_params, 0.5, [0.5, 1.0])

    def test_table_is_real_and_read_only(self, ground_table):
        assert ground_table.is_real
        assert ground_table.provenance is WaveProvenance.ANALYTIC
        with pytest.raises(ValueError):
            ground_table.psi[0] = 1.0

    @pytest.mark.parametrize("index", [0, 1, 2])
    def test_node_counts(self, unit_params, exact_spectrum, index):
        """Уровень n имеет n − 1 узлов"""
        level = exact_spectrum[index]
        grid = np.linspace(1e-3, decay_point(unit_params, level.energy, 12.0), 600)
        table = bound_wavefunction(unit_params, level.a, grid)
        assert table.node_count() == level.n - 1

    def test_decays_past_turning_point(self, unit_params, exact_spectrum, ground_table):
        turning = outer_turning_point(unit_params, exact_spectrum[0].energy)
        tail = np.abs(ground_table.psi[ground_table.x > 1.5 * turning])
        assert np.all(np.diff(tail) < 0)
        assert tail[-1] < 1e-3 * np.max(np.abs(ground_table.psi))


class TestNormalization:
    """Нормировка и перекрытия"""

    def test_unit_norm(self, ground_table):
        table = normalize(ground_table)
        assert table.normalized
        assert overlap(table, table) == pytest.approx(1.0, abs=1e-12)

    def test_idempotent(self, ground_table):
        once = normalize(ground_table)
        twice = normalize(once)
        assert np.max(np.abs(twice.psi - once.psi)) < 1e-12

    def test_scale_invariant(self, ground_table):
        direct = normalize(ground_table)
        scaled = normalize(ground_table.scaled(3.0))
        assert np.max(np.abs(scaled.psi - direct.psi)) < 1e-12

    def test_insufficient_decay(self):
        table = WaveTable(np.linspace(1.0, 2.0, 11), np.ones(11), WaveProvenance.ANALYTIC)
        with pytest.raises(InsufficientDecayError):
            normalize(table)

    def test_orthogonality(self, unit_params, exact_spectrum):
        x_max = decay_point(unit_params, exact_spectrum[1].energy, 16.0)
        grid = np.linspace(1e-3, x_max, 3001)
        first = normalize(bound_wavefunction(unit_params, exact_spectrum[0].a, grid))
        second = normalize(bound_wavefunction(unit_params, exact_spectrum[1].a, grid))
        assert overlap(first, second) < 1e-5

    def test_overlap_requires_normalized(self, ground_table):
        with pytest.raises(ParameterDomainError):
            overlap(ground_table, ground_table)

    def test_resample_out_of_range(self, ground_table):
        with pytest.raises(ParameterDomainError):
            ground_table.resample(np.linspace(1e-4, 1.0, 10))


class TestResidual:
    """Невязка уравнения Шрёдингера"""

    @pytest.mark.parametrize("kind", ["first", "second", "between"])
    def test_exact_solution(self, unit_params, exact_spectrum, kind):
        """Решение точное при любой энергии E < V0, не только на спектре"""
        e1, e2 = exact_spectrum[0].energy, exact_spectrum[1].energy
        energy = {"first": e1, "second": e2, "between": 0.5 * (e1 + e2)}[kind]
        table = tabulate(unit_params, energy, Branch.MINUS, RESIDUAL_GRID)
        assert schrodinger_residual(unit_params, energy, table, stencil=5) <= 1e-6

    def test_grid_convergence_near_origin(self, unit_params, exact_spectrum):
        """У x = 0.05 решение ведёт себя как x^{−1/4}: 2001 точки не хватает, 8001 достаточно"""
        energy = 0.5 * (exact_spectrum[0].energy + exact_spectrum[1].energy)
        coarse = tabulate(unit_params, energy, Branch.MINUS, np.linspace(0.05, 5.0, 2001))
        fine = tabulate(unit_params, energy, Branch.MINUS, RESIDUAL_GRID)
        r_coarse = schrodinger_residual(unit_params, energy, coarse, stencil=5)
        r_fine = schrodinger_residual(unit_params, energy, fine, stencil=5)
        assert r_fine <= 1e-6
        assert r_fine < 0.1 * r_coarse

    def test_plus_branch_solution(self, unit_params):
        grid = np.linspace(0.2, 2.0, 801)
        table = tabulate(unit_params, -12.0, Branch.PLUS, grid)
        assert schrodinger_residual(unit_params, -12.0, table, stencil=5) <= 1e-6

    def test_second_order_convergence(self, unit_params):
        """Трёхточечная схема: невязка падает в 4 раза при шаге h/2"""
        energy = -12.0
        coarse = tabulate(unit_params, energy, Branch.MINUS, np.linspace(0.5, 5.0, 400))
        fine = tabulate(unit_params, energy, Branch.MINUS, np.linspace(0.5, 5.0, 799))
        ratio = schrodinger_residual(unit_params, energy, coarse) / schrodinger_residual(unit_params, energy, fine)
        assert 3.0 < ratio < 5.0

    def test_perturbation_detected(self, unit_params):
        energy = -12.0
        table = tabulate(unit_params, energy, Branch.MINUS, PERTURBATION_GRID)
        bump = 0.05 * np.max(np.abs(table.psi)) * table.x * np.exp(-table.x)
        perturbed = WaveTable(table.x, table.psi + bump, WaveProvenance.ANALYTIC)
        assert schrodinger_residual(unit_params, energy, perturbed, stencil=5) > 1e-4

    def test_five_point_requires_uniform_grid(self, unit_params):
        grid = np.geomspace(0.5, 2.0, 50)
        table = tabulate(unit_params, -12.0, Branch.MINUS, grid)
        with pytest.raises(GridError):
            schrodinger_residual(unit_params, -12.0, table, stencil=5)
        assert schrodinger_residual(unit_params, -12.0, table, stencil=3) < 1e-2

    def test_too_few_points(self, unit_params):
        table = WaveTable(np.array([1.0, 1.1, 1.2, 1.3]), np.ones(4), WaveProvenance.ANALYTIC)
        with pytest.raises(GridError):
            schrodinger_residual(unit_params, -12.0, table)

    def test_too_coarse(self, unit_params):
        table = tabulate(unit_params, -12.0, Branch.MINUS, np.linspace(0.05, 5.0, 6))
        with pytest.raises(GridError):
            schrodinger_residual(unit_params, -12.0, table)


class TestPlusBranchDivergence:
    """ψ₊ растёт экспоненциально за точкой поворота"""

    def test_monotone_growth(self, unit_params, exact_spectrum):
        energy = exact_spectrum[0].energy
        turning = outer_turning_point(unit_params, energy)
        grid = np.linspace(1.5 * turning, 4.0 * turning, 60)
        amplitude = np.abs(tabulate(unit_params, energy, Branch.PLUS, grid).psi)
        assert np.all(np.diff(amplitude) > 0)
        assert amplitude[-1] / amplitude[0] >= 100.0
