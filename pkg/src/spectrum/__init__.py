from src.spectrum.approximation import (
    closed_form_energy,
    closed_form_levels,
    trig_levels,
    trig_phase,
    trig_roots,
)
from src.spectrum.equation import (
    f_ratio,
    f_ratio_approx,
    find_roots,
    kappa_constant,
    spectrum_lhs,
    spectrum_terms,
)
from src.spectrum.levels import Level, LevelError, Provenance
from src.spectrum.service import error_report, exact_levels

__all__ = [
    "Level",
    "LevelError",
    "Provenance",
    "closed_form_energy",
    "closed_form_levels",
    "error_report",
    "exact_levels",
    "f_ratio",
    "f_ratio_approx",
    "find_roots",
    "kappa_constant",
    "spectrum_lhs",
    "spectrum_terms",
    "trig_levels",
    "trig_phase",
    "trig_roots",
]
