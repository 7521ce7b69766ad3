"""
Численный оракул: стрельба Нумерова от начала координат

Интегрирование идёт по u = ln x для φ(u) = ψ/√x:

    φ'' = g(u)·φ,  g = x²·(2m/ħ²)(V − E) + 1/4

со стартом из ряда Фробениуса. Уровни отделяются счётчиком

    C(E) = (число узлов ψ на (x_start, x_end]) + [L(x_end) < −κ(x_end)],

где L = ψ'/ψ, κ = √(2m(V − E))/ħ. C(E) не убывает по E и возрастает
на единицу при прохождении каждого собственного значения.
"""

import math
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from loguru import logger

from src.analytic.wavetable import WaveProvenance, WaveTable, normalize
from src.core.exceptions import BracketError, OverflowUnrecoverableError, StepTooCoarseError
from src.model.params import PhysParams
from src.model.potential import decay_point, outer_turning_point, potential, potential_minimum
from src.oracle.config import ShootingConfig
from src.oracle.frobenius import frobenius_boundary
from src.spectrum.approximation import check_level_count
from src.spectrum.levels import Level, Provenance
from src.utils.logging import log_call_flow, trace

_RESCALE_LIMIT = 1e150
_RESCALE = 1e-150
_MAX_CEILING_HALVINGS = 60
# допустимое расхождение фазы при контрольном прогоне h/2
_PHASE_TOL = 1e-3


class ShootResult(NamedTuple):
    """Состояние решения на правой границе"""
    energy: float
    x_end: float
    log_derivative: float
    decay_rate: float
    node_count: int

    @property
    def count(self) -> int:
        """C(E): число собственных значений ниже E"""
        return self.node_count + (1 if self.log_derivative < -self.decay_rate else 0)

    @property
    def phase(self) -> float:
        scale = max(self.decay_rate, 1.0 / self.x_end)
        return math.atan2(1.0, self.log_derivative / scale)


class _Run(NamedTuple):
    x: np.ndarray
    phi: Optional[List[float]]
    nodes: int
    log_derivative: float


def _numerov(
    params: PhysParams,
    energy: float,
    x_start: float,
    x_end: float,
    steps: int,
    keep: bool = False,
) -> _Run:
    u = np.linspace(math.log(x_start), math.log(x_end), steps + 1)
    h = float(u[1] - u[0])
    u = np.append(u, u[-1] + h)
    x = np.exp(u)
    g = x * x * (2.0 * params.m / params.hbar ** 2) * (potential(params, x) - energy) + 0.25
    w = (1.0 - h * h * g / 12.0).tolist()

    psi0, _ = frobenius_boundary(params, energy, float(x[0]))
    psi1, _ = frobenius_boundary(params, energy, float(x[1]))
    before = 0.0
    prev = psi0 / math.sqrt(x[0])
    cur = psi1 / math.sqrt(x[1])
    values = [prev, cur] if keep else None

    nodes = 0
    sign = 1 if cur > 0 else -1
    for k in range(1, steps + 1):
        nxt = ((12.0 - 10.0 * w[k]) * cur - w[k - 1] * prev) / w[k + 1]
        if not math.isfinite(nxt):
            raise OverflowUnrecoverableError(
                f"Нумеров: нечисловое значение при x = {x[k + 1]:.6g}, E = {energy:.12g}"
            )
        if k < steps and nxt != 0.0:
            current_sign = 1 if nxt > 0 else -1
            if current_sign != sign:
                nodes += 1
                sign = current_sign
        if abs(nxt) > _RESCALE_LIMIT:
            nxt *= _RESCALE
            cur *= _RESCALE
            prev *= _RESCALE
            if keep:
                values = [v * _RESCALE for v in values]
        before, prev, cur = prev, cur, nxt
        if keep:
            values.append(nxt)

    # before = φ_{N−1}, prev = φ_N, cur = φ_{N+1}
    dphi = ((2.0 * w[steps + 1] - 1.0) * cur - (2.0 * w[steps - 1] - 1.0) * before) / (2.0 * h)
    x_n = float(x[steps])
    if prev == 0.0:
        log_derivative = math.inf
    else:
        log_derivative = (0.5 + dphi / prev) / x_n

    if keep:
        values = values[: steps + 1]
    return _Run(x[: steps + 1], values, nodes, log_derivative)


def auto_x_end(params: PhysParams, energy: float, config: ShootingConfig) -> float:
    """
    Правая граница для энергии E

    max(x_end_factor × внешняя точка поворота, точка WKB-затухания e^{−decay_exponent});
    ниже дна ямы — x_end_factor × положение минимума.
    """
    x_min, v_min = potential_minimum(params)
    if energy <= v_min:
        return config.x_end_factor * x_min
    return max(
        config.x_end_factor * outer_turning_point(params, energy),
        decay_point(params, energy, config.decay_exponent),
    )


def _decay_rate(params: PhysParams, energy: float, x: float) -> float:
    excess = potential(params, x) - energy
    return math.sqrt(2.0 * params.m * excess) / params.hbar if excess > 0 else 0.0


def integrate_outward(
    params: PhysParams,
    energy: float,
    config: Optional[ShootingConfig] = None,
    x_end: Optional[float] = None,
) -> ShootResult:
    """
    Интегрирование от x_start до x_end при энергии E

    Raises:
        CutoffTooLargeError: ряд Фробениуса не сходится в x_start
        OverflowUnrecoverableError: нечисловые значения
        StepTooCoarseError: контрольный прогон с шагом h/2 расходится (config.check_step)
    """
    config = config or ShootingConfig()
    end = x_end or config.x_end or auto_x_end(params, energy, config)

    run = _numerov(params, energy, config.x_start, end, config.steps)
    result = ShootResult(energy, end, run.log_derivative, _decay_rate(params, energy, end), run.nodes)

    if config.check_step:
        fine_run = _numerov(params, energy, config.x_start, end, 2 * config.steps)
        fine = result._replace(log_derivative=fine_run.log_derivative, node_count=fine_run.nodes)
        if fine.node_count != result.node_count or abs(fine.phase - result.phase) > _PHASE_TOL:
            raise StepTooCoarseError(
                f"Шаг слишком велик при E = {energy:.12g}: узлы {result.node_count}/{fine.node_count}, "
                f"фаза {result.phase:.6f}/{fine.phase:.6f}"
            )
    return result


def count_levels(params: PhysParams, energy: float, config: Optional[ShootingConfig] = None) -> int:
    """C(E) на автоматической или заданной области"""
    return integrate_outward(params, energy, config).count


def _shooting_domain(params: PhysParams, n_max: int, config: ShootingConfig) -> Tuple[float, ShootResult]:
    """
    Энергия-потолок E_c = V0 − (V0 − V_min)/2^j с C(E_c) ≥ n_max и область под неё

    Raises:
        BracketError: уровней в области меньше n_max
    """
    _, v_min = potential_minimum(params)
    for j in range(1, _MAX_CEILING_HALVINGS + 1):
        ceiling = params.v0 - (params.v0 - v_min) / 2.0 ** j
        end = config.x_end or auto_x_end(params, ceiling, config)
        result = integrate_outward(params, ceiling, config, x_end=end)
        log_call_flow(f"Потолок E_c = {ceiling:.10g}, x_end = {end:.6g}, C = {result.count}")
        if result.count >= n_max:
            return end, result
    raise BracketError(
        f"В области найдено меньше {n_max} уровней (последний потолок C = {result.count})",
        level=result.count + 1,
    )


@trace(show_result=False)
def eigenvalues_numeric(params: PhysParams, n_max: int, config: Optional[ShootingConfig] = None) -> List[Level]:
    """
    Первые n_max собственных значений бисекцией по счётчику C(E)

    Область [x_start, x_end] фиксируется один раз; значения C(E)
    кешируются и задают начальные скобки следующих уровней.

    Raises:
        BracketError: уровень не отделяется или бисекция не сошлась (level = номер)
    """
    params.require_well()
    n_max = check_level_count(n_max)
    config = config or ShootingConfig()

    _, v_min = potential_minimum(params)
    x_end, ceiling = _shooting_domain(params, n_max, config)
    cache: Dict[float, ShootResult] = {ceiling.energy: ceiling}
    floor = integrate_outward(params, v_min, config, x_end=x_end)
    if floor.count != 0:
        raise BracketError(f"C(V_min) = {floor.count}, ожидался 0", level=1)
    cache[v_min] = floor

    levels = []
    for n in range(1, n_max + 1):
        lo = max(e for e, r in cache.items() if r.count <= n - 1)
        hi = min(e for e, r in cache.items() if r.count >= n)
        if not lo < hi:
            raise BracketError(f"Счётчик C(E) немонотонен около уровня {n}", level=n)

        for iteration in range(config.max_bisections):
            if hi - lo <= config.energy_tol * max(abs(lo), abs(hi), 1e-300):
                break
            mid = 0.5 * (lo + hi)
            result = integrate_outward(params, mid, config, x_end=x_end)
            cache[mid] = result
            if result.count >= n:
                hi = mid
            else:
                lo = mid
        else:
            raise BracketError(
                f"Бисекция уровня {n} не сошлась за {config.max_bisections} шагов: [{lo:.12g}, {hi:.12g}]",
                level=n,
            )

        energy = 0.5 * (lo + hi)
        nodes = cache[lo].node_count
        log_call_flow(f"Уровень {n}: E = {energy:.12g}, узлов {nodes}, бисекций {iteration}")
        levels.append(Level(n, None, energy, Provenance.ORACLE, nodes))

    logger.info(f"Оракул: {n_max} уровней на [{config.x_start:g}, {x_end:.6g}], шагов {config.steps}")
    return levels


def richardson_eigenvalues(
    params: PhysParams,
    n_max: int,
    config: Optional[ShootingConfig] = None,
) -> List[Level]:
    """Экстраполяция Ричардсона по прогонам с N и 2N шагами (схема четвёртого порядка)"""
    config = config or ShootingConfig()
    coarse = eigenvalues_numeric(params, n_max, config)
    fine = eigenvalues_numeric(params, n_max, config.refined())
    return [
        Level(f.n, None, f.energy + (f.energy - c.energy) / 15.0, Provenance.ORACLE, f.nodes)
        for c, f in zip(coarse, fine)
    ]


@trace(show_result=False)
def wavefunction_numeric(
    params: PhysParams,
    energy: float,
    config: Optional[ShootingConfig] = None,
) -> WaveTable:
    """
    Нормированная собственная функция оракула при энергии E_n

    Растущий хвост (после минимума |ψ| за точкой поворота) отбрасывается.
    """
    config = config or ShootingConfig()
    end = config.x_end or auto_x_end(params, energy, config)
    run = _numerov(params, energy, config.x_start, end, config.steps, keep=True)
    psi = np.asarray(run.phi) * np.sqrt(run.x)

    turning = outer_turning_point(params, energy)
    tail = np.nonzero(run.x > turning)[0]
    cut = len(psi)
    if len(tail):
        cut = int(tail[0] + np.argmin(np.abs(psi[tail]))) + 1
    logger.debug(f"Хвост ψ обрезан на x = {run.x[cut - 1]:.6g} (x_end = {end:.6g})")

    return normalize(WaveTable(run.x[:cut], psi[:cut], WaveProvenance.ORACLE))
