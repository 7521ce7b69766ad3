"""
Ряд Фробениуса у начала координат

Регулярное решение ψ = Σ c_j x^{5/4 + j/2}, c_0 = 1. Подстановка
(2m/ħ²)(V − E) = Σ F_i x^{−2 + i/2} даёт рекурсию

    c_j = 4/(j(j + 3)) · Σ_{i=1..4} F_i c_{j−i}.
"""

from typing import List, Tuple

from src.core.exceptions import CutoffTooLargeError, ParameterDomainError
from src.model.params import PhysParams
from src.model.potential import sqrt_term_coefficient

LEADING_EXPONENT = 1.25
DEFAULT_TERMS = 12


def expansion_coefficients(params: PhysParams, energy: float) -> Tuple[float, float, float, float]:
    """F_1..F_4 при x^{−3/2}, x^{−1}, x^{−1/2}, x^0"""
    k = 2.0 * params.m / params.hbar ** 2
    return (
        k * params.v1,
        k * params.v2,
        k * sqrt_term_coefficient(params),
        k * (params.v0 - energy),
    )


def series_coefficients(params: PhysParams, energy: float, terms: int = DEFAULT_TERMS) -> List[float]:
    f = expansion_coefficients(params, energy)
    coeffs = [1.0]
    for j in range(1, terms):
        total = sum(f[i - 1] * coeffs[j - i] for i in range(1, min(4, j) + 1))
        coeffs.append(4.0 * total / (j * (j + 3)))
    return coeffs


def frobenius_boundary(
    params: PhysParams,
    energy: float,
    x0: float,
    tol: float = 1e-12,
    terms: int = DEFAULT_TERMS,
) -> Tuple[float, float]:
    """
    ψ(x0) и ψ'(x0) регулярного решения

    Raises:
        CutoffTooLargeError: последний член ряда больше tol·|ψ|
    """
    if not x0 > 0:
        raise ParameterDomainError(f"Точка старта должна быть > 0, получено {x0:g}")

    coeffs = series_coefficients(params, energy, terms)
    psi = 0.0
    dpsi = 0.0
    last = 0.0
    for j, c in enumerate(coeffs):
        power = LEADING_EXPONENT + 0.5 * j
        term = c * x0 ** power
        psi += term
        dpsi += power * term / x0
        last = term

    if abs(last) > tol * abs(psi):
        raise CutoffTooLargeError(
            f"Ряд Фробениуса не сошёлся в x0 = {x0:g}: последний член {abs(last):.2e} при |ψ| = {abs(psi):.2e}"
        )
    return psi, dpsi
