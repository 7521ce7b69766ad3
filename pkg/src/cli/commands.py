"""
Реализация подкоманд CLI

Каждая функция возвращает CommandResult; форматирование и запись
выполняет src.cli.emit.
"""

from typing import Optional, Sequence

import numpy as np
from loguru import logger

from src.analytic.solutions import bound_wavefunction
from src.analytic.wavetable import normalize, overlap
from src.cli import figures
from src.cli.emit import CommandResult, Table
from src.cli.validation import run_validation, validation_table
from src.core.exceptions import ParameterDomainError
from src.model.params import PhysParams
from src.model.potential import decay_point, potential
from src.oracle.shooting import eigenvalues_numeric, wavefunction_numeric
from src.spectrum.approximation import closed_form_levels, trig_levels
from src.spectrum.service import exact_levels

LEVEL_METHODS = ("exact", "closed-form", "trig", "oracle", "all")
WAVE_SOURCES = ("analytic", "oracle")
FIGURE_IDS = (1, 2, 3, 4)
# WKB-затухание правой границы сетки по умолчанию
_DEFAULT_DECAY = 12.0


def _grid(x_min: float, x_max: float, points: int, log_grid: bool = False) -> np.ndarray:
    if not x_min > 0:
        raise ParameterDomainError(f"x_min должен быть > 0, получено {x_min:g}")
    if not x_max > x_min:
        raise ParameterDomainError(f"x_max = {x_max:g} должен быть больше x_min = {x_min:g}")
    if points < 2:
        raise ParameterDomainError(f"Нужно хотя бы 2 точки, получено {points}")
    if log_grid:
        return np.geomspace(x_min, x_max, points)
    return np.linspace(x_min, x_max, points)


def cmd_potential(params: PhysParams, x_min: float, x_max: float, points: int, log_grid: bool = False) -> CommandResult:
    """Таблица V(x)"""
    grid = _grid(x_min, x_max, points, log_grid)
    values = potential(params, grid)
    table = Table("potential", ["x", "V"])
    for x, v in zip(grid, values):
        table.add(float(x), float(v))
    return CommandResult(table)


def _relative(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


def cmd_levels(params: PhysParams, n_max: int, method: str = "exact") -> CommandResult:
    """Уровни энергии выбранным методом или сводная таблица (method='all')"""
    if method not in LEVEL_METHODS:
        raise ParameterDomainError(f"Неизвестный метод: {method}")

    if method == "all":
        exact = exact_levels(params, n_max)
        closed = closed_form_levels(params, n_max)
        trig = trig_levels(params, n_max)
        oracle = eigenvalues_numeric(params, n_max)
        table = Table(
            "levels",
            [
                "n", "a_exact", "E_exact",
                "E_closed_form", "rel_err_closed_form",
                "E_trig", "rel_err_trig",
                "E_oracle", "rel_err_oracle", "nodes_oracle",
            ],
        )
        for e, c, t, o in zip(exact, closed, trig, oracle):
            table.add(
                e.n, e.a, e.energy,
                c.energy, _relative(c.energy, e.energy),
                t.energy, _relative(t.energy, e.energy),
                o.energy, _relative(o.energy, e.energy), o.nodes,
            )
        return CommandResult(table)

    if method == "exact":
        levels = exact_levels(params, n_max)
    elif method == "closed-form":
        levels = closed_form_levels(params, n_max)
    elif method == "trig":
        levels = trig_levels(params, n_max)
    else:
        levels = eigenvalues_numeric(params, n_max)

    table = Table("levels", ["n", "a_n", "E_n", "method"])
    for level in levels:
        table.add(level.n, level.a, level.energy, level.provenance.value)
    return CommandResult(table)


def cmd_wavefunction(
    params: PhysParams,
    n: int,
    source: str = "analytic",
    x_min: float = 1e-3,
    x_max: Optional[float] = None,
    points: int = 400,
    normalized: bool = True,
) -> CommandResult:
    """
    Собственная функция уровня n

    Столбец psi — аналитическое решение; при source='oracle'
    добавляется psi_oracle (знак согласован с psi), а перекрытие
    уходит в манифест.
    """
    if source not in WAVE_SOURCES:
        raise ParameterDomainError(f"Неизвестный источник: {source}")
    if n < 1:
        raise ParameterDomainError(f"Номер уровня должен быть ≥ 1, получено {n}")

    level = exact_levels(params, n)[-1]
    numeric = None
    if source == "oracle":
        oracle_level = eigenvalues_numeric(params, n)[-1]
        numeric = wavefunction_numeric(params, oracle_level.energy)

    if x_max is None:
        x_max = decay_point(params, level.energy, _DEFAULT_DECAY)
        if numeric is not None:
            x_max = min(x_max, float(numeric.x[-1]))
    grid = _grid(x_min, x_max, points)

    table_psi = bound_wavefunction(params, level.a, grid)
    if normalized:
        table_psi = normalize(table_psi)

    extra = {"n": n, "a_n": level.a, "energy": level.energy, "normalized": normalized}
    if numeric is None:
        table = Table("wavefunction", ["x", "psi"])
        for x, v in zip(table_psi.x, table_psi.psi):
            table.add(float(x), float(v))
        return CommandResult(table, extra)

    if numeric.x[0] > grid[0] or numeric.x[-1] < grid[-1]:
        raise ParameterDomainError(
            f"Сетка [{grid[0]:g}, {grid[-1]:g}] выходит за таблицу оракула [{numeric.x[0]:g}, {numeric.x[-1]:g}]"
        )
    oracle_values = numeric.resample(grid).psi
    if normalized:
        extra["overlap"] = overlap(normalize(bound_wavefunction(params, level.a, numeric.x[::10])), numeric)
    if float(np.dot(oracle_values, table_psi.psi)) < 0:
        oracle_values = -oracle_values
    if not normalized:
        oracle_values = oracle_values * (np.max(np.abs(table_psi.psi)) / np.max(np.abs(oracle_values)))

    table = Table("wavefunction", ["x", "psi", "psi_oracle"])
    for x, v, w in zip(grid, table_psi.psi, oracle_values):
        table.add(float(x), float(v), float(w))
    extra["energy_oracle"] = oracle_level.energy
    logger.info(f"Уровень {n}: перекрытие с оракулом {extra.get('overlap', float('nan')):.8f}")
    return CommandResult(table, extra)


def cmd_validate(
    params: PhysParams,
    n_max: int = 10,
    oracle_n_max: int = 5,
    overlap_n_max: int = 3,
    tolerance_scale: float = 1.0,
) -> CommandResult:
    """Полный набор проверок; passed=False при любом отказе"""
    if tolerance_scale < 0:
        raise ParameterDomainError(f"tolerance_scale должен быть ≥ 0, получено {tolerance_scale:g}")
    checks, passed = run_validation(params, n_max, oracle_n_max, overlap_n_max, tolerance_scale)
    result = validation_table(checks)
    if passed:
        logger.success(f"✓ Все проверки пройдены ({len(checks)})")
    else:
        logger.error(f"✗ Не пройдено: {', '.join(result.extra['failed_checks'])}")
    return result


def cmd_figure(
    params: PhysParams,
    figure_id: int,
    v1_values: Sequence[float] = figures.DEFAULT_V1_VALUES,
    n_max: int = 10,
    points: Optional[int] = None,
) -> CommandResult:
    """Таблица данных рисунка 1–4"""
    if figure_id == 1:
        return figures.potential_curves(params, v1_values, points=points or 400)
    if figure_id == 2:
        return figures.ratio_curves(points=points or 541)
    if figure_id == 3:
        return figures.energy_comparison(params, n_max)
    if figure_id == 4:
        return figures.wavefunction_curves(params, points=points or 400)
    raise ParameterDomainError(f"Неизвестный рисунок: {figure_id}")
