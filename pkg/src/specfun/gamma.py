import math

import numpy as np
from scipy import special

from src.core.exceptions import ConvergenceError, ParameterDomainError, PoleError


def gamma(x: float) -> float:
    """
    Гамма-функция Γ(x)

    Отрицательные нецелые аргументы обрабатываются через формулу отражения
    внутри scipy.special.gamma; точность не хуже 12 значащих цифр при |x| ≤ 30.

    Raises:
        PoleError: x — ноль или отрицательное целое
        ConvergenceError: результат не помещается в float (x > 171.6)
    """
    x = float(x)
    if not math.isfinite(x):
        raise ParameterDomainError(f"Γ(x) определена только для конечных x: {x}")
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"Γ(x) имеет полюс в x = {x:g}")

    value = float(special.gamma(x))
    if not math.isfinite(value):
        raise ConvergenceError(f"Γ({x:g}) переполняет float")
    return value


def b0_constant() -> float:
    """B₀ = Γ(1/3) / (6·∛3·Γ(2/3)) ≈ 0.2286202"""
    return gamma(1.0 / 3.0) / (6.0 * float(np.cbrt(3.0)) * gamma(2.0 / 3.0))
