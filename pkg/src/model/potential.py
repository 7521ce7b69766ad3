"""
Потенциал V(x) и отображения энергия ↔ параметр a

    V(x) = V0 + 5ħ²/(32m x²) + V1 x^{−3/2} + V2/x + C x^{−1/2},
    C = 8mV1(ħ²V2 − 2mV1²)/ħ⁴

    ε(E) = ±√(8m(V0 − E))/ħ
    a(E) = −2¹¹ m⁶ V1⁶ / (ħ¹² ε³)
    E(a) = V0 − 2^{13/3} a^{−2/3} m³ V1⁴ / ħ⁶
"""

import math
from typing import Tuple, Union

import numpy as np
from scipy import integrate, optimize

from src.core.exceptions import ConvergenceError, ParameterDomainError
from src.model.params import Branch, PhysParams

ArrayLike = Union[float, np.ndarray]

# окно поиска минимума в единицах характерной длины
_SCAN_DECADES = (-4.0, 6.0)
_SCAN_POINTS = 2001
_MAX_EXPANSIONS = 200


def sqrt_term_coefficient(params: PhysParams) -> float:
    """Коэффициент при x^{−1/2}"""
    m, hbar, v1, v2 = params.m, params.hbar, params.v1, params.v2
    return 8.0 * m * v1 * (hbar ** 2 * v2 - 2.0 * m * v1 ** 2) / hbar ** 4


def potential(params: PhysParams, x: ArrayLike) -> ArrayLike:
    """
    V(x) при x > 0

    Принимает число или массив; для массива вычисление векторное.

    Raises:
        ParameterDomainError: есть x ≤ 0 или нечисловые точки
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):
        raise ParameterDomainError("Потенциал определён только при x > 0")

    m, hbar = params.m, params.hbar
    value = (
        params.v0
        + 5.0 * hbar ** 2 / (32.0 * m * arr ** 2)
        + params.v1 * arr ** -1.5
        + params.v2 / arr
        + sqrt_term_coefficient(params) / np.sqrt(arr)
    )
    if np.ndim(x) == 0:
        return float(value)
    return value


def epsilon_of_energy(params: PhysParams, energy: float, branch: Branch) -> float:
    """ε = ±√(8m(V0 − E))/ħ, знак задаётся ветвью"""
    if not energy < params.v0:
        raise ParameterDomainError(f"Ожидается E < V0 = {params.v0:g}, получено E = {energy:g}")
    return branch.sign * math.sqrt(8.0 * params.m * (params.v0 - energy)) / params.hbar


def a_of_energy(params: PhysParams, energy: float, branch: Branch) -> float:
    """a = −2¹¹ m⁶ V1⁶ / (ħ¹² ε³); положителен на ветви MINUS"""
    params.require_well()
    eps = epsilon_of_energy(params, energy, branch)
    return -(2.0 ** 11) * params.m ** 6 * params.v1 ** 6 / (params.hbar ** 12 * eps ** 3)


def energy_of_a(params: PhysParams, a: float) -> float:
    """Обратное отображение для ветви MINUS: E = V0 − 2^{13/3} a^{−2/3} m³V1⁴/ħ⁶"""
    params.require_well()
    if not a > 0:
        raise ParameterDomainError(f"Ожидается a > 0, получено a = {a:g}")
    m, hbar = params.m, params.hbar
    return params.v0 - 2.0 ** (13.0 / 3.0) * a ** (-2.0 / 3.0) * m ** 3 * params.v1 ** 4 / hbar ** 6


def potential_minimum(params: PhysParams) -> Tuple[float, float]:
    """
    Положение и глубина глобального минимума V(x)

    Грубый просмотр по логарифмической сетке, затем уточнение
    scipy.optimize.minimize_scalar в соседних узлах.

    Returns:
        (x_min, V_min)
    """
    params.require_well()
    scale = params.length_scale
    xs = scale * np.logspace(*_SCAN_DECADES, _SCAN_POINTS)
    values = potential(params, xs)
    idx = int(np.argmin(values))
    if idx == 0 or idx == len(xs) - 1:
        raise ParameterDomainError("Минимум потенциала вне окна поиска: яма отсутствует")

    result = optimize.minimize_scalar(
        lambda u: potential(params, math.exp(u)),
        bounds=(math.log(xs[idx - 1]), math.log(xs[idx + 1])),
        method="bounded",
        options={"xatol": 1e-12},
    )
    x_min = math.exp(result.x)
    return x_min, potential(params, x_min)


def outer_turning_point(params: PhysParams, energy: float) -> float:
    """
    Внешняя точка поворота: V(x) = E справа от минимума

    Raises:
        ParameterDomainError: E ≤ V_min или E ≥ V0 (точки поворота нет)
    """
    x_min, v_min = potential_minimum(params)
    if not v_min < energy < params.v0:
        raise ParameterDomainError(
            f"Точка поворота существует только при V_min < E < V0: E = {energy:g}, V_min = {v_min:g}"
        )

    upper = 2.0 * x_min
    for _ in range(_MAX_EXPANSIONS):
        if potential(params, upper) > energy:
            break
        upper *= 2.0
    else:
        raise ConvergenceError(f"Не удалось найти внешнюю точку поворота для E = {energy:g}")

    return optimize.bisect(
        lambda x: potential(params, x) - energy,
        x_min,
        upper,
        xtol=1e-13 * upper,
    )


def decay_exponent(params: PhysParams, energy: float, x_from: float, x_to: float) -> float:
    """WKB-показатель затухания ∫ κ(x) dx, κ = √(2m(V − E))/ħ в запрещённой области"""
    def kappa(x: float) -> float:
        excess = potential(params, x) - energy
        if excess <= 0:
            return 0.0
        return math.sqrt(2.0 * params.m * excess) / params.hbar

    value, _ = integrate.quad(kappa, x_from, x_to, limit=200)
    return value


def decay_point(params: PhysParams, energy: float, exponent: float, start_factor: float = 1.5) -> float:
    """
    Точка за внешней точкой поворота, где WKB-затухание достигает e^{−exponent}

    Поиск начинается с start_factor × точка поворота, правая граница
    увеличивается в 1.25 раза до выполнения условия.
    """
    turning = outer_turning_point(params, energy)
    x_end = start_factor * turning
    for _ in range(_MAX_EXPANSIONS):
        if decay_exponent(params, energy, turning, x_end) >= exponent:
            return x_end
        x_end *= 1.25
    raise ConvergenceError(f"Затухание e^(-{exponent:g}) не достигнуто для E = {energy:g}")
