"""
Табулированная волновая функция и операции над ней
"""

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
from scipy import integrate
from scipy.interpolate import CubicSpline

from src.core.config import settings
from src.core.exceptions import GridError, InsufficientDecayError, ParameterDomainError


class WaveProvenance(str, Enum):
    ANALYTIC = "analytic"
    ORACLE = "oracle"


@dataclass(frozen=True)
class WaveSample:
    """Одна точка таблицы"""
    x: float
    psi: complex

    def to_dict(self) -> Dict[str, Any]:
        return {"x": self.x, "psi_re": self.psi.real, "psi_im": self.psi.imag}


def check_grid(x: np.ndarray) -> np.ndarray:
    """Сетка: одномерная, конечная, x > 0, строго возрастающая"""
    grid = np.asarray(x, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise GridError("Сетка должна быть одномерной и содержать хотя бы две точки")
    if not np.all(np.isfinite(grid)):
        raise GridError("Сетка содержит нечисловые точки")
    if grid[0] <= 0:
        raise ParameterDomainError(f"Сетка должна лежать в x > 0, первая точка {grid[0]:g}")
    if not np.all(np.diff(grid) > 0):
        raise GridError("Сетка должна строго возрастать")
    return grid


@dataclass(frozen=True)
class WaveTable:
    """
    Значения ψ на сетке x

    Массивы копируются и помечаются только для чтения. psi хранится
    как float64 для вещественных решений и complex128 для ветви PLUS.
    """
    x: np.ndarray
    psi: np.ndarray
    provenance: WaveProvenance
    normalized: bool = False
    norm: Optional[float] = None

    def __post_init__(self):
        grid = check_grid(self.x).copy()
        values = np.array(self.psi)
        if values.dtype.kind not in "fc":
            values = values.astype(float)
        if values.shape != grid.shape:
            raise GridError(f"Размеры x {grid.shape} и psi {values.shape} не совпадают")
        if not np.all(np.isfinite(values)):
            raise GridError("Таблица ψ содержит нечисловые значения")
        grid.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "x", grid)
        object.__setattr__(self, "psi", values)

    def __len__(self) -> int:
        return len(self.x)

    @property
    def is_real(self) -> bool:
        return self.psi.dtype.kind == "f"

    @property
    def samples(self) -> List[WaveSample]:
        return [WaveSample(float(x), complex(v)) for x, v in zip(self.x, self.psi)]

    def density(self) -> np.ndarray:
        return np.abs(self.psi) ** 2

    def node_count(self, floor: float = 1e-12) -> int:
        """
        Число смен знака вещественной части

        Точки с |ψ| < floor·max|ψ| пропускаются: там остаётся только
        шум хвостов.
        """
        values = np.real(self.psi)
        cutoff = floor * float(np.max(np.abs(values))) if len(values) else 0.0
        signs = np.sign(values[np.abs(values) > cutoff])
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def scaled(self, factor: complex) -> "WaveTable":
        return WaveTable(self.x, self.psi * factor, self.provenance)

    def resample(self, grid: np.ndarray) -> "WaveTable":
        """Кубический сплайн (scipy) на новую сетку внутри исходного диапазона"""
        target = check_grid(grid)
        if target[0] < self.x[0] or target[-1] > self.x[-1]:
            raise ParameterDomainError(
                f"Сетка [{target[0]:g}, {target[-1]:g}] выходит за таблицу [{self.x[0]:g}, {self.x[-1]:g}]"
            )
        if self.is_real:
            values = CubicSpline(self.x, self.psi)(target)
        else:
            values = CubicSpline(self.x, self.psi.real)(target) + 1j * CubicSpline(self.x, self.psi.imag)(target)
        return WaveTable(target, values, self.provenance, self.normalized, self.norm)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "provenance": self.provenance.value,
            "normalized": self.normalized,
            "norm": self.norm,
            "samples": [s.to_dict() for s in self.samples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


def _integral(values: np.ndarray, x: np.ndarray) -> complex:
    if np.iscomplexobj(values):
        return complex(integrate.simpson(values.real, x=x), integrate.simpson(values.imag, x=x))
    return complex(integrate.simpson(values, x=x))


def _check_decay(table: WaveTable) -> None:
    amplitude = np.abs(table.psi)
    peak = float(np.max(amplitude))
    if peak == 0:
        raise InsufficientDecayError("Таблица тождественно равна нулю")
    threshold = settings.decay_threshold * peak
    if amplitude[0] > threshold or amplitude[-1] > threshold:
        raise InsufficientDecayError(
            f"ψ не затухает на концах: |ψ(x0)| = {amplitude[0]:.3g}, |ψ(x_end)| = {amplitude[-1]:.3g}, "
            f"порог {threshold:.3g}"
        )


def normalize(table: WaveTable) -> WaveTable:
    """
    ∫|ψ|² dx = 1 (составная формула Симпсона scipy)

    Raises:
        InsufficientDecayError: значения на концах выше decay_threshold·max|ψ|
    """
    _check_decay(table)
    norm = math.sqrt(_integral(table.density(), table.x).real)
    if not norm > 0 or not math.isfinite(norm):
        raise InsufficientDecayError(f"Норма таблицы вырождена: {norm}")
    return WaveTable(table.x, table.psi / norm, table.provenance, normalized=True, norm=norm)


def overlap(first: WaveTable, second: WaveTable) -> float:
    """
    |⟨ψ1, ψ2⟩| для нормированных таблиц

    Если сетки различаются, обе функции переносятся сплайном на общую
    часть диапазона; за её пределами вклад считается нулевым.
    """
    if not (first.normalized and second.normalized):
        raise ParameterDomainError("Перекрытие определено для нормированных таблиц")

    if first.x.shape == second.x.shape and np.array_equal(first.x, second.x):
        x, psi1, psi2 = first.x, first.psi, second.psi
    else:
        lo = max(first.x[0], second.x[0])
        hi = min(first.x[-1], second.x[-1])
        if not lo < hi:
            raise GridError("Таблицы не имеют общего диапазона")
        base = first if len(first) >= len(second) else second
        x = base.x[(base.x >= lo) & (base.x <= hi)]
        if len(x) < 3:
            raise GridError("Общая часть сеток слишком мала")
        psi1 = first.resample(x).psi
        psi2 = second.resample(x).psi

    return abs(_integral(np.conj(psi1) * psi2, x))
