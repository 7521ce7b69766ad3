from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.config import settings


class ShootingConfig(BaseModel):
    """
    Параметры стрельбы Нумерова

    x_end = None — правая граница выбирается автоматически
    (x_end_factor × внешняя точка поворота энергии-потолка).
    """
    model_config = ConfigDict(frozen=True)

    x_start: float = Field(default_factory=lambda: settings.shooting_x_start, gt=0)
    x_end: Optional[float] = None
    x_end_factor: float = Field(default_factory=lambda: settings.shooting_x_end_factor, gt=1)
    steps: int = Field(default_factory=lambda: settings.shooting_steps, ge=10000)
    energy_tol: float = Field(default_factory=lambda: settings.shooting_energy_tol, gt=0)
    max_bisections: int = Field(default_factory=lambda: settings.shooting_max_bisections, ge=1)
    decay_exponent: float = Field(default_factory=lambda: settings.shooting_decay_exponent, gt=0)
    check_step: bool = Field(default_factory=lambda: settings.shooting_check_step)

    @model_validator(mode="after")
    def _check_domain(self) -> "ShootingConfig":
        if self.x_end is not None and not self.x_end > self.x_start:
            raise ValueError(f"x_end = {self.x_end:g} должен быть больше x_start = {self.x_start:g}")
        return self

    def refined(self) -> "ShootingConfig":
        """Та же конфигурация с удвоенным числом шагов"""
        return self.model_copy(update={"steps": 2 * self.steps})
