"""
Уравнение спектра

    H_{a+½}(−√(2a)) + [√(2a) + (2a)^{1/6}]·H_{a−½}(−√(2a)) = 0

и его форма-отношение F(a) = 1 + c·H_{a−½}/H_{a+½}. Корень a = 1/2
исключается: при нём скобка решения (для m = ħ = V1 = 1 это 2y + 2(1 − 4√x))
обращается в ноль при всех x, и решение тождественно равно нулю.
"""

import math
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger
from scipy import optimize

from src.core.config import settings
from src.core.exceptions import ParameterDomainError, PoleError
from src.specfun.gamma import b0_constant
from src.specfun.hermite import hermite_h
from src.specfun.types import AxisValue
from src.utils.logging import log_call_flow

SPURIOUS_ROOT = 0.5
MAX_SCAN_STEP = 0.1


def spectrum_terms(a: float) -> Tuple[float, float]:
    """(H_{a+½}(y0), c·H_{a−½}(y0)) при y0 = −√(2a)"""
    if not a > 0:
        raise ParameterDomainError(f"Уравнение спектра определено при a > 0, получено a = {a:g}")
    root = math.sqrt(2.0 * a)
    y0 = AxisValue.real(-root)
    coeff = root + (2.0 * a) ** (1.0 / 6.0)
    return hermite_h(a + 0.5, y0).real, coeff * hermite_h(a - 0.5, y0).real


def spectrum_lhs(a: float) -> float:
    """Левая часть уравнения спектра; гладкая и вещественная при a > 0"""
    first, second = spectrum_terms(a)
    return first + second


def f_ratio(a: float) -> float:
    """
    F(a) = 1 + c·H_{a−½}(y0)/H_{a+½}(y0)

    Raises:
        PoleError: H_{a+½}(y0) обращается в ноль
    """
    first, second = spectrum_terms(a)
    if first == 0 or abs(first) <= 1e-15 * abs(second):
        raise PoleError(f"F(a) имеет полюс при a = {a:.12g}")
    return 1.0 + second / first


def kappa_constant() -> float:
    """κ = 6·B₀·2^{−1/3} ≈ 1.0887"""
    return 6.0 * b0_constant() * 2.0 ** (-1.0 / 3.0)


def f_ratio_approx(a: float) -> float:
    """
    Тригонометрическое приближение F(a) при больших a

        [sin(πa − π/3) − κ sin(πa + π/3)] / [sin(πa − π/3) + 6B₀ a^{1/3} sin(πa + π/3)]

    Знаменатель сохраняет множитель a^{1/3}, из-за чего полюса
    приближения смещаются относительно точных.

    Raises:
        PoleError: знаменатель обращается в ноль
    """
    if not a > 0:
        raise ParameterDomainError(f"Приближение определено при a > 0, получено a = {a:g}")
    lower = math.sin(math.pi * a - math.pi / 3.0)
    upper = math.sin(math.pi * a + math.pi / 3.0)
    numerator = lower - kappa_constant() * upper
    denominator = lower + 6.0 * b0_constant() * a ** (1.0 / 3.0) * upper
    if abs(denominator) < 1e-12:
        raise PoleError(f"F_approx(a) имеет полюс при a = {a:.12g}")
    return numerator / denominator


def find_roots(a_max: float, scan_step: Optional[float] = None) -> List[float]:
    """
    Корни уравнения спектра на (1/2, a_max] по возрастанию

    Сканирование с шагом scan_step от 1/2 + шаг, смена знака уточняется
    scipy.optimize.bisect до root_xtol. Результат детерминирован.

    Raises:
        ParameterDomainError: шаг вне (0, 0.1]
    """
    step = settings.scan_step if scan_step is None else float(scan_step)
    if not 0 < step <= MAX_SCAN_STEP:
        raise ParameterDomainError(f"Шаг сканирования должен лежать в (0, {MAX_SCAN_STEP}], получено {step:g}")

    log_call_flow(
        f"Корень a = {SPURIOUS_ROOT} исключён: |lhs| = {abs(spectrum_lhs(SPURIOUS_ROOT)):.1e}, "
        "скобка решения равна нулю при всех x (ψ ≡ 0)"
    )

    count = int(math.floor((a_max - SPURIOUS_ROOT) / step + 1e-9))
    if count < 1:
        return []
    grid = SPURIOUS_ROOT + step * np.arange(1, count + 1)
    values = [spectrum_lhs(float(a)) for a in grid]

    roots: List[float] = []
    for k, value in enumerate(values):
        if value == 0.0:
            roots.append(float(grid[k]))
            continue
        if k + 1 < len(values) and value * values[k + 1] < 0:
            root = optimize.bisect(
                spectrum_lhs,
                float(grid[k]),
                float(grid[k + 1]),
                xtol=settings.root_xtol,
                maxiter=200,
            )
            log_call_flow(f"Корень в [{grid[k]:.4f}, {grid[k + 1]:.4f}]: a = {root:.15g}")
            roots.append(float(root))

    logger.debug(f"Найдено корней на (0.5, {a_max:g}]: {len(roots)}")
    return roots
