"""
Функция Эрмита H_ν(z) произвольного вещественного порядка

Представление через две функции Куммера:

    H_ν(z) = 2^ν √π [ M(−ν/2, 1/2, z²) / Γ((1−ν)/2) − 2z·M((1−ν)/2, 3/2, z²) / Γ(−ν/2) ]

Для вещественного и чисто мнимого z величина z² вещественна, поэтому
нужны только вещественные M. При вещественном z > 0 слагаемые растут как
e^{z²} и сокращаются — рабочая точность поднимается на z²/ln10 цифр.
Выше порога hermite_asymptotic_threshold используется форма

    H_ν(z) = (2z)^ν ₂F₀(−ν/2, (1−ν)/2; ; −1/z²),

вычисляемая mpmath через функцию U (без обрыва асимптотического ряда).
В полюсах Γ множитель 1/Γ равен нулю, и целые порядки дают полиномы.
"""

import math
from typing import Union

from src.core.config import settings
from src.core.exceptions import ConvergenceError, ParameterDomainError
from src.specfun.kummer import BASE_DPS, kummer_mp, mp_context
from src.specfun.types import AxisValue


def _kummer_form(ctx, nu, axis: AxisValue):
    """Представление через две функции Куммера (mpf или mpc)"""
    nu = ctx.mpf(nu)
    zsq = ctx.mpf(axis.squared())
    prefactor = ctx.power(2, nu) * ctx.sqrt(ctx.pi)

    rg_even = ctx.rgamma((1 - nu) / 2)
    rg_odd = ctx.rgamma(-nu / 2)

    even = kummer_mp(ctx, -nu / 2, ctx.mpf(0.5), zsq) * rg_even if rg_even else ctx.mpf(0)
    odd = kummer_mp(ctx, (1 - nu) / 2, ctx.mpf(1.5), zsq) * rg_odd if rg_odd else ctx.mpf(0)

    odd_part = -2 * ctx.mpf(axis.magnitude) * odd
    if axis.is_real:
        return prefactor * (even + odd_part)
    return ctx.mpc(prefactor * even, prefactor * odd_part)


def _asymptotic_form(ctx, nu, z):
    """(2z)^ν ₂F₀(−ν/2, (1−ν)/2; ; −1/z²) для вещественного z > 0"""
    nu = ctx.mpf(nu)
    z = ctx.mpf(z)
    return ctx.power(2 * z, nu) * ctx.hyp2f0(-nu / 2, (1 - nu) / 2, -1 / (z * z))


def hermite_h(nu: float, z: Union[AxisValue, float]) -> complex:
    """
    Функция Эрмита H_ν(z)

    Args:
        nu: Порядок (любое вещественное, включая отрицательные)
        z: Аргумент на вещественной или мнимой оси (float — вещественный)

    Returns:
        complex: вещественный для вещественного z, комплексный для мнимого

    Raises:
        ConvergenceError: от функции Куммера или при переполнении float
    """
    axis = z if isinstance(z, AxisValue) else AxisValue.real(z)
    nu = float(nu)
    if not math.isfinite(nu):
        raise ParameterDomainError(f"Порядок ν должен быть конечным: {nu}")

    ctx = mp_context()
    if axis.is_real and axis.magnitude > settings.hermite_asymptotic_threshold:
        with ctx.workdps(BASE_DPS):
            value = _asymptotic_form(ctx, nu, axis.magnitude)
    else:
        extra = 0
        if axis.is_real and axis.magnitude > 0:
            extra = int(math.ceil(axis.squared() / math.log(10)))
        with ctx.workdps(BASE_DPS + extra):
            value = _kummer_form(ctx, nu, axis)

    result = complex(value)
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise ConvergenceError(f"H_{nu:g}({axis.value}) переполняет float")
    return result
