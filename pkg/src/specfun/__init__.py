from .gamma import b0_constant, gamma
from .hermite import hermite_h
from .kummer import kummer_m
from .types import AxisKind, AxisValue, ComplexValue

__all__ = [
    "gamma",
    "b0_constant",
    "kummer_m",
    "hermite_h",
    "AxisKind",
    "AxisValue",
    "ComplexValue",
]
