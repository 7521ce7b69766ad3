"""
Точные решения уравнения Шрёдингера для V2 = 0

    ψ(x) = x^{−1/4} e^{−y²/2} [ H_{a+½}(y) + c·(1 + εħ²√x/(4mV1))·H_{a−½}(y) ]

    ветвь MINUS: y = √(−εx) − √(2a)           (вещественная ось)
    ветвь PLUS:  y = i(√(εx) − √(2|a|))       (мнимая ось)
    c = √(2a) + A·(2a)^{1/6}

Корни берутся главными ветвями (cmath), A = 1 или e^{4iπ/3}.
"""

import cmath
import math
from typing import Sequence, Tuple

import numpy as np
from loguru import logger

from src.analytic.wavetable import WaveProvenance, WaveTable, check_grid
from src.core.config import settings
from src.core.exceptions import ConvergenceError, ParameterDomainError, RootValidityError
from src.model.params import Branch, PhysParams
from src.model.potential import a_of_energy, energy_of_a, epsilon_of_energy
from src.specfun.hermite import hermite_h
from src.specfun.types import AxisValue
from src.utils.logging import trace


class _BranchData:
    """Величины, не зависящие от x, для одной энергии и ветви"""

    def __init__(self, params: PhysParams, energy: float, branch: Branch):
        params.require_well()
        params.require_headline()
        self.params = params
        self.branch = branch
        self.eps = epsilon_of_energy(params, energy, branch)
        self.a = a_of_energy(params, energy, branch)
        two_a = complex(2.0 * self.a)
        self.offset = math.sqrt(abs(2.0 * self.a))
        self.coeff = cmath.sqrt(two_a) + branch.phase * two_a ** (1.0 / 6.0)

    def argument(self, x: float) -> AxisValue:
        if self.branch is Branch.MINUS:
            return AxisValue.real(math.sqrt(-self.eps * x) - self.offset)
        return AxisValue.imaginary(math.sqrt(self.eps * x) - self.offset)

    def origin_argument(self) -> AxisValue:
        if self.branch is Branch.MINUS:
            return AxisValue.real(-self.offset)
        return AxisValue.imaginary(-self.offset)

    def shift(self, x: float) -> float:
        p = self.params
        return 1.0 + self.eps * p.hbar ** 2 * math.sqrt(x) / (4.0 * p.m * p.v1)

    def bracket_terms(self, y: AxisValue, shift: float) -> Tuple[complex, complex]:
        first = hermite_h(self.a + 0.5, y)
        second = self.coeff * shift * hermite_h(self.a - 0.5, y)
        return first, second


def _check_point(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise ParameterDomainError(f"Решение определено при x > 0, получено x = {x}")
    if x < settings.near_origin_cutoff:
        raise ParameterDomainError(
            f"x = {x:g} ближе к нулю, чем near_origin_cutoff = {settings.near_origin_cutoff:g}; "
            "используйте origin_limit"
        )
    return x


def _evaluate(data: _BranchData, x: float) -> complex:
    x = _check_point(x)
    y = data.argument(x)
    try:
        gauss = math.exp(-0.5 * y.squared())
    except OverflowError as exc:
        raise ConvergenceError(f"e^(-y²/2) переполняет float при x = {x:g}") from exc
    first, second = data.bracket_terms(y, data.shift(x))
    value = x ** -0.25 * gauss * (first + second)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ConvergenceError(f"ψ({x:g}) переполняет float")
    return value


def fundamental_solution(params: PhysParams, energy: float, branch: Branch, x: float) -> complex:
    """
    ψ_±(x) для энергии E < V0

    На ветви MINUS значение вещественное, на PLUS — комплексное.

    Raises:
        ParameterDomainError: V2 ≠ 0, V1 ≤ 0, E ≥ V0, x ≤ 0 или x < near_origin_cutoff
    """
    return _evaluate(_BranchData(params, energy, branch), x)


def general_solution(params: PhysParams, energy: float, c1: complex, c2: complex, x: float) -> complex:
    """c1·ψ₋(x) + c2·ψ₊(x)"""
    value = 0j
    if c1:
        value += c1 * fundamental_solution(params, energy, Branch.MINUS, x)
    if c2:
        value += c2 * fundamental_solution(params, energy, Branch.PLUS, x)
    return value


def origin_limit(params: PhysParams, energy: float, branch: Branch) -> complex:
    """
    lim x→0 x^{1/4}ψ(x): скобка решения в y = −√(2|a|) с гауссовым множителем

    На ветви MINUS обращается в ноль ровно на спектре.
    """
    data = _BranchData(params, energy, branch)
    y = data.origin_argument()
    first, second = data.bracket_terms(y, 1.0)
    return math.exp(-0.5 * y.squared()) * (first + second)


def tabulate(params: PhysParams, energy: float, branch: Branch, grid: Sequence[float]) -> WaveTable:
    """ψ на сетке; для ветви MINUS таблица вещественная"""
    x = check_grid(np.asarray(grid, dtype=float))
    data = _BranchData(params, energy, branch)
    values = np.array([_evaluate(data, float(point)) for point in x], dtype=complex)
    if branch is Branch.MINUS:
        values = values.real
    return WaveTable(x, values, WaveProvenance.ANALYTIC)


def check_root(params: PhysParams, a_n: float) -> float:
    """
    Проверка, что a_n — корень спектрального уравнения

    Returns:
        float: относительная невязка |lhs| / (|H_{a+½}| + |c·H_{a−½}|)
    """
    if not a_n > 0.5:
        raise ParameterDomainError(f"Корень связанного состояния должен быть > 1/2, получено {a_n:g}")
    data = _BranchData(params, energy_of_a(params, a_n), Branch.MINUS)
    first, second = data.bracket_terms(data.origin_argument(), 1.0)
    scale = abs(first) + abs(second)
    relative = abs(first + second) / scale if scale else 0.0
    if relative > settings.root_validity_tol:
        raise RootValidityError(
            f"a = {a_n:.12g} не является корнем: относительная невязка {relative:.3g} "
            f"> {settings.root_validity_tol:g}"
        )
    return relative


@trace(show_result=False)
def bound_wavefunction(params: PhysParams, a_n: float, grid: Sequence[float]) -> WaveTable:
    """
    Ненормированная собственная функция уровня с корнем a_n (ветвь MINUS)

    Raises:
        RootValidityError: a_n не удовлетворяет спектральному уравнению
    """
    relative = check_root(params, a_n)
    energy = energy_of_a(params, a_n)
    logger.debug(f"Собственная функция: a = {a_n:.12g}, E = {energy:.12g}, невязка корня {relative:.2e}")
    return tabulate(params, energy, Branch.MINUS, grid)
