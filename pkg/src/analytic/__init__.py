from src.analytic.residual import schrodinger_residual
from src.analytic.solutions import (
    bound_wavefunction,
    check_root,
    fundamental_solution,
    general_solution,
    origin_limit,
    tabulate,
)
from src.analytic.wavetable import WaveProvenance, WaveSample, WaveTable, check_grid, normalize, overlap

__all__ = [
    "WaveProvenance",
    "WaveSample",
    "WaveTable",
    "bound_wavefunction",
    "check_grid",
    "check_root",
    "fundamental_solution",
    "general_solution",
    "normalize",
    "origin_limit",
    "overlap",
    "schrodinger_residual",
    "tabulate",
]
