import numpy as np

from src.analytic.wavetable import WaveTable
from src.core.exceptions import GridError, ParameterDomainError
from src.model.params import PhysParams
from src.model.potential import potential

# допустимо не больше h·q = 1 (q: локальное волновое число)
_MAX_PHASE_PER_STEP = 1.0


def _second_derivative_3(x: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Трёхточечная схема, допускает неравномерную сетку"""
    h0 = x[1:-1] - x[:-2]
    h1 = x[2:] - x[1:-1]
    return 2.0 * (psi[2:] * h0 - psi[1:-1] * (h0 + h1) + psi[:-2] * h1) / (h0 * h1 * (h0 + h1))


def _second_derivative_5(x: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Пятиточечная схема четвёртого порядка, только равномерная сетка"""
    steps = np.diff(x)
    h = steps[0]
    if not np.allclose(steps, h, rtol=1e-9, atol=0.0):
        raise GridError("Пятиточечная схема требует равномерной сетки")
    return (-psi[4:] + 16.0 * psi[3:-1] - 30.0 * psi[2:-2] + 16.0 * psi[1:-3] - psi[:-4]) / (12.0 * h * h)


def schrodinger_residual(params: PhysParams, energy: float, table: WaveTable, stencil: int = 3) -> float:
    """
    Относительная невязка уравнения ψ'' + (2m/ħ²)(E − V)ψ = 0 на таблице

    Невязка r = ψ'' + k(E − V)ψ во внутренних узлах нормируется глобально:
    max|r| / max(max|ψ''|, max|k(E − V)ψ|). Ошибка схемы падает как h²
    для stencil=3 и как h⁴ для stencil=5.

    Raises:
        GridError: меньше пяти точек, сетка слишком грубая или таблица нулевая
    """
    if stencil not in (3, 5):
        raise ParameterDomainError(f"Поддерживаются схемы 3 и 5 точек, получено {stencil}")
    x = table.x
    psi = table.psi
    if len(x) < 5:
        raise GridError(f"Для невязки нужно не меньше 5 точек, получено {len(x)}")

    k = 2.0 * params.m / params.hbar ** 2
    gap = energy - potential(params, x)
    wavenumber = np.sqrt(k * np.abs(gap))
    steps = np.diff(x)
    if np.max(steps * np.maximum(wavenumber[1:], wavenumber[:-1])) > _MAX_PHASE_PER_STEP:
        raise GridError("Сетка слишком грубая для локальной длины волны")

    if stencil == 3:
        d2 = _second_derivative_3(x, psi)
        inner = slice(1, -1)
    else:
        d2 = _second_derivative_5(x, psi)
        inner = slice(2, -2)

    potential_term = k * gap[inner] * psi[inner]
    scale = max(float(np.max(np.abs(d2))), float(np.max(np.abs(potential_term))))
    if scale == 0:
        raise GridError("Таблица тождественно равна нулю")
    return float(np.max(np.abs(d2 + potential_term))) / scale
