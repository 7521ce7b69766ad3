import cmath
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from src.core.exceptions import ParameterDomainError


class PhysParams(BaseModel):
    """
    Физические константы и силы потенциала

    Единицы не фиксируются: вызывающий код сам выбирает систему
    (по умолчанию m = ħ = 1, V0 = 0, V1 = 1).
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    m: float = Field(default=1.0, gt=0)
    hbar: float = Field(default=1.0, gt=0)
    v0: float = 0.0
    v1: float = 1.0
    v2: float = 0.0

    def headline(self) -> "PhysParams":
        """Основной потенциал семейства: V2 = 0"""
        return self.model_copy(update={"v2": 0.0})

    def with_coulomb_cancellation(self) -> "PhysParams":
        """V2 = 2mV1²/ħ² — член x^{−1/2} обращается в ноль"""
        return self.model_copy(update={"v2": 2.0 * self.m * self.v1 ** 2 / self.hbar ** 2})

    @property
    def length_scale(self) -> float:
        """Характерная длина ħ⁴/(m²V1²) (при V1 = 0 — единица)"""
        if self.v1 == 0:
            return 1.0
        return self.hbar ** 4 / (self.m ** 2 * self.v1 ** 2)

    def require_well(self) -> None:
        """Связанные состояния существуют только для V1 > 0"""
        if not self.v1 > 0:
            raise ParameterDomainError(f"Связанные состояния требуют V1 > 0, получено V1 = {self.v1:g}")

    def require_headline(self) -> None:
        """Аналитическое решение построено для V2 = 0"""
        if self.v2 != 0:
            raise ParameterDomainError(f"Аналитическое решение требует V2 = 0, получено V2 = {self.v2:g}")


class Branch(str, Enum):
    """Фундаментальное решение: знак ε и фаза A"""
    MINUS = "minus"
    PLUS = "plus"

    @property
    def sign(self) -> int:
        return -1 if self is Branch.MINUS else 1

    @property
    def phase(self) -> complex:
        """A = 1 для ε < 0, A = e^{4iπ/3} для ε > 0"""
        if self is Branch.MINUS:
            return complex(1.0, 0.0)
        return cmath.exp(4j * cmath.pi / 3)
