"""
Вырожденная гипергеометрическая функция Куммера M(α, β, z)

Стратегия вычисления:
    |z| ≤ kummer_series_limit (30)  — степенной ряд с повышенной рабочей точностью
    z > 30                          — преобразование Куммера M = e^z·M(β−α, β, −z),
                                      внутренняя функция — асимптотика mpmath
    z < −30                         — асимптотика mpmath напрямую

Все вычисления идут в собственном (поточно-локальном) контексте mpmath,
наружу возвращается float.
"""

import math
import threading

from mpmath.ctx_mp import MPContext

from src.core.config import settings
from src.core.exceptions import ConvergenceError, ParameterDomainError, PoleError

# Объявленная область: |z| ≤ 700 (e^z ещё помещается в float)
KUMMER_MAX_ARGUMENT = 700.0

BASE_DPS = 25
MAX_SERIES_TERMS = 5000

_local = threading.local()


def mp_context() -> MPContext:
    """Поточно-локальный контекст mpmath (workdps не затрагивает другие потоки)"""
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = MPContext()
        _local.ctx = ctx
    return ctx


def _is_pole(beta: float) -> bool:
    return beta <= 0.0 and beta == math.floor(beta)


def _series(ctx, alpha, beta, z):
    """Прямое суммирование Σ (α)_k z^k / ((β)_k k!)"""
    term = ctx.mpf(1)
    total = ctx.mpf(1)
    # дальше этого номера модули членов монотонно убывают
    settle = int(max(abs(z), -alpha, 0)) + 2
    small_run = 0

    for k in range(MAX_SERIES_TERMS):
        term = term * (alpha + k) * z / ((beta + k) * (k + 1))
        if not term:
            # α неположительное целое, ряд оборвался
            return total
        total += term
        if k >= settle and abs(term) <= ctx.eps * abs(total):
            small_run += 1
            if small_run >= 2:
                return total
        else:
            small_run = 0

    raise ConvergenceError(
        f"Ряд M({float(alpha):g}, {float(beta):g}, {float(z):g}) не сошёлся за {MAX_SERIES_TERMS} членов"
    )


def kummer_mp(ctx, alpha, beta, z):
    """
    M(α, β, z) в текущей точности контекста ctx

    Аргументы — числа mpmath (или float); рабочая точность поднимается
    на число цифр, теряемых при сокращении членов ряда.
    """
    limit = settings.kummer_series_limit
    zf = float(z)
    extra = int(math.ceil(abs(zf) / math.log(10))) + 10

    with ctx.workdps(ctx.dps + extra):
        alpha = ctx.mpf(alpha)
        beta = ctx.mpf(beta)
        z = ctx.mpf(z)
        if abs(zf) <= limit:
            value = _series(ctx, alpha, beta, z)
        elif zf > 0:
            value = ctx.exp(z) * ctx.hyp1f1(beta - alpha, beta, -z)
        else:
            value = ctx.hyp1f1(alpha, beta, z)
    return +value


def kummer_m(alpha: float, beta: float, z: float) -> float:
    """
    M(α, β, z) = Σ (α)_k z^k / ((β)_k k!)

    Относительная точность не хуже 1e-10 при |z| ≤ 50.

    Raises:
        PoleError: β — ноль или отрицательное целое
        ParameterDomainError: |z| вне объявленной области
        ConvergenceError: ряд не сошёлся или результат переполнил float
    """
    alpha, beta, z = float(alpha), float(beta), float(z)
    if not all(math.isfinite(v) for v in (alpha, beta, z)):
        raise ParameterDomainError("Аргументы M(α, β, z) должны быть конечными")
    if _is_pole(beta):
        raise PoleError(f"M(α, β, z) не определена при β = {beta:g}")
    if abs(z) > KUMMER_MAX_ARGUMENT:
        raise ParameterDomainError(f"|z| = {abs(z):g} вне области |z| ≤ {KUMMER_MAX_ARGUMENT:g}")

    ctx = mp_context()
    with ctx.workdps(BASE_DPS):
        value = float(kummer_mp(ctx, alpha, beta, z))

    if not math.isfinite(value):
        raise ConvergenceError(f"M({alpha:g}, {beta:g}, {z:g}) переполняет float")
    return value
