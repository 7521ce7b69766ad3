from typing import List

from loguru import logger

from src.core.exceptions import ConvergenceError
from src.model.params import PhysParams
from src.model.potential import energy_of_a
from src.spectrum.approximation import check_level_count, closed_form_levels
from src.spectrum.equation import find_roots
from src.spectrum.levels import Level, LevelError, Provenance
from src.utils.logging import trace

_MAX_EXTENSIONS = 5


@trace(show_result=False)
def exact_levels(params: PhysParams, n_max: int) -> List[Level]:
    """
    Первые n_max уровней из корней уравнения спектра

    Корни зависят только от a, поэтому параметры входят лишь через E(a).
    """
    params.require_well()
    n_max = check_level_count(n_max)

    a_max = n_max + 1.0
    roots = find_roots(a_max)
    for _ in range(_MAX_EXTENSIONS):
        if len(roots) >= n_max:
            break
        a_max += 1.0
        roots = find_roots(a_max)
    if len(roots) < n_max:
        raise ConvergenceError(f"Найдено {len(roots)} корней вместо {n_max} на (0.5, {a_max:g}]")

    levels = [
        Level(n, a, energy_of_a(params, a), Provenance.EXACT)
        for n, a in enumerate(roots[:n_max], start=1)
    ]
    logger.info(f"Точный спектр: {n_max} уровней, E_1 = {levels[0].energy:.10g}")
    return levels


def error_report(params: PhysParams, n_max: int) -> List[LevelError]:
    """Относительная ошибка замкнутой формулы |E_closed − E_exact| / |E_exact|"""
    exact = exact_levels(params, n_max)
    closed = closed_form_levels(params, n_max)
    report = []
    for e, c in zip(exact, closed):
        report.append(LevelError(e.n, abs(c.energy - e.energy) / abs(e.energy)))
    return report
