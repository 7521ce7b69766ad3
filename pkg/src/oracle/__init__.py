from src.oracle.config import ShootingConfig
from src.oracle.frobenius import frobenius_boundary, series_coefficients
from src.oracle.shooting import (
    ShootResult,
    auto_x_end,
    count_levels,
    eigenvalues_numeric,
    integrate_outward,
    richardson_eigenvalues,
    wavefunction_numeric,
)

__all__ = [
    "ShootResult",
    "ShootingConfig",
    "auto_x_end",
    "count_levels",
    "eigenvalues_numeric",
    "frobenius_boundary",
    "integrate_outward",
    "richardson_eigenvalues",
    "series_coefficients",
    "wavefunction_numeric",
]
