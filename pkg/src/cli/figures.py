"""
Таблицы для четырёх рисунков
"""

import math
from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from src.analytic.solutions import bound_wavefunction
from src.cli.emit import CommandResult, Table
from src.core.exceptions import ParameterDomainError, PoleError
from src.model.params import PhysParams
from src.model.potential import decay_point, potential
from src.spectrum.approximation import closed_form_levels, trig_phase
from src.spectrum.equation import f_ratio, f_ratio_approx, find_roots
from src.spectrum.service import exact_levels

DEFAULT_V1_VALUES = (0.0, 0.5, 1.0)
_WAVE_LEVELS = 3


def potential_curves(
    params: PhysParams,
    v1_values: Sequence[float] = DEFAULT_V1_VALUES,
    x_min: float = 0.05,
    x_max: float = 10.0,
    points: int = 400,
) -> CommandResult:
    """V(x) для нескольких V1 при прочих параметрах без изменений"""
    grid = np.linspace(x_min, x_max, points)
    curves = [potential(params.model_copy(update={"v1": float(v1)}), grid) for v1 in v1_values]
    table = Table("figure1", ["x"] + [f"V_v1={v1:g}" for v1 in v1_values])
    for i, x in enumerate(grid):
        table.add(float(x), *(float(c[i]) for c in curves))
    return CommandResult(table)


def _safe(func, a: float) -> Optional[float]:
    try:
        return func(a)
    except PoleError:
        return None


def ratio_curves(a_min: float = 0.6, a_max: float = 6.0, points: int = 541) -> CommandResult:
    """
    F(a) и F_approx(a); в полюсах значение пустое

    Корни обеих кривых записываются в манифест.
    """
    grid = np.linspace(a_min, a_max, points)
    table = Table("figure2", ["a", "F_exact", "F_approx"])
    for a in grid:
        table.add(float(a), _safe(f_ratio, float(a)), _safe(f_ratio_approx, float(a)))

    exact_roots = find_roots(a_max)
    approx_roots = _approx_roots(a_min, a_max)
    return CommandResult(table, {"roots_exact": exact_roots, "roots_approx": approx_roots})


def _approx_roots(a_min: float, a_max: float) -> List[float]:
    """Корни числителя F_approx: n + θ/π внутри [a_min, a_max]"""
    phase = trig_phase()
    candidates = range(int(math.floor(a_min)), int(math.ceil(a_max)) + 1)
    return [n + phase for n in candidates if a_min <= n + phase <= a_max]


def energy_comparison(params: PhysParams, n_max: int = 10) -> CommandResult:
    """Точные уровни против замкнутой формулы"""
    exact = exact_levels(params, n_max)
    closed = closed_form_levels(params, n_max)
    table = Table("figure3", ["n", "E_exact", "E_closed_form", "rel_err"])
    for e, c in zip(exact, closed):
        table.add(e.n, e.energy, c.energy, abs(c.energy - e.energy) / abs(e.energy))
    return CommandResult(table)


def wavefunction_curves(params: PhysParams, x_min: float = 1e-3, x_max: Optional[float] = None, points: int = 400) -> CommandResult:
    """Ненормированные ψ_1..ψ_3 на общей сетке"""
    levels = exact_levels(params, _WAVE_LEVELS)
    if x_max is None:
        x_max = decay_point(params, levels[-1].energy, 12.0)
    if not x_min < x_max:
        raise ParameterDomainError(f"Пустой диапазон x: [{x_min:g}, {x_max:g}]")
    grid = np.linspace(x_min, x_max, points)
    tables = [bound_wavefunction(params, level.a, grid) for level in levels]
    table = Table("figure4", ["x"] + [f"psi_{level.n}" for level in levels])
    for i, x in enumerate(grid):
        table.add(float(x), *(float(t.psi[i]) for t in tables))
    logger.info(f"Рисунок 4: {points} точек на [{x_min:g}, {x_max:.4g}]")
    return CommandResult(table)
