"""
Приближённые спектры: тригонометрические корни и замкнутая формула
"""

import math
from typing import List, Optional

from src.core.exceptions import ParameterDomainError
from src.model.params import PhysParams
from src.model.potential import energy_of_a
from src.spectrum.equation import kappa_constant
from src.spectrum.levels import Level, Provenance


def check_level_count(n_max: int) -> int:
    if int(n_max) != n_max or n_max < 1:
        raise ParameterDomainError(f"n_max должно быть целым ≥ 1, получено {n_max}")
    return int(n_max)


def trig_phase(kappa: Optional[float] = None) -> float:
    """Дробная часть корней θ/π, θ = atan2(√3(1 + κ), 1 − κ)"""
    k = kappa_constant() if kappa is None else float(kappa)
    return math.atan2(math.sqrt(3.0) * (1.0 + k), 1.0 - k) / math.pi


def trig_roots(n_max: int, kappa: Optional[float] = None) -> List[float]:
    """
    Корни числителя приближения: sin(πa − π/3) = κ sin(πa + π/3)

    a_n = n + θ/π; при κ ≈ 1.0887 дробная часть ≈ 0.508,
    при κ = 1 корни ровно полуцелые.
    """
    n_max = check_level_count(n_max)
    phase = trig_phase(kappa)
    return [n + phase for n in range(1, n_max + 1)]


def trig_levels(params: PhysParams, n_max: int, kappa: Optional[float] = None) -> List[Level]:
    """Энергии тригонометрических корней"""
    return [
        Level(n, a, energy_of_a(params, a), Provenance.TRIG_APPROX)
        for n, a in enumerate(trig_roots(n_max, kappa), start=1)
    ]


def closed_form_energy(params: PhysParams, n: int) -> float:
    """E_n = V0 − 32 m³ V1⁴ / (ħ⁶ (2n + 1)^{2/3})"""
    params.require_well()
    m, hbar = params.m, params.hbar
    return params.v0 - 32.0 * m ** 3 * params.v1 ** 4 / (hbar ** 6 * (2 * n + 1) ** (2.0 / 3.0))


def closed_form_levels(params: PhysParams, n_max: int) -> List[Level]:
    """Уровни при a_n = n + 1/2"""
    n_max = check_level_count(n_max)
    return [
        Level(n, n + 0.5, closed_form_energy(params, n), Provenance.CLOSED_FORM)
        for n in range(1, n_max + 1)
    ]
