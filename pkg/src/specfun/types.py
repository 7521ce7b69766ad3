import math
from dataclasses import dataclass
from enum import Enum

from src.core.exceptions import ParameterDomainError

# Комплексные значения: встроенный complex (re, im)
ComplexValue = complex


class AxisKind(str, Enum):
    """Ось аргумента функции Эрмита"""
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class AxisValue:
    """
    Аргумент на вещественной или мнимой оси

    Значение равно magnitude для REAL и i·magnitude для IMAGINARY,
    поэтому квадрат аргумента всегда вещественный.
    """
    kind: AxisKind
    magnitude: float

    def __post_init__(self):
        if not math.isfinite(self.magnitude):
            raise ParameterDomainError(f"Аргумент должен быть конечным: {self.magnitude}")

    @classmethod
    def real(cls, value: float) -> "AxisValue":
        return cls(AxisKind.REAL, float(value))

    @classmethod
    def imaginary(cls, value: float) -> "AxisValue":
        return cls(AxisKind.IMAGINARY, float(value))

    @property
    def is_real(self) -> bool:
        return self.kind is AxisKind.REAL

    @property
    def value(self) -> complex:
        """Значение аргумента как complex"""
        if self.is_real:
            return complex(self.magnitude, 0.0)
        return complex(0.0, self.magnitude)

    def squared(self) -> float:
        """+magnitude² на вещественной оси, −magnitude² на мнимой"""
        square = self.magnitude * self.magnitude
        return square if self.is_real else -square

    def conjugate(self) -> "AxisValue":
        if self.is_real:
            return self
        return AxisValue.imaginary(-self.magnitude)
