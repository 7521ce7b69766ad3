from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="HEUN_",
        case_sensitive=False,
        extra="allow",
    )

    # Физические параметры по умолчанию (m = ħ = 1, V0 = 0, V1 = 1)
    mass: float = 1.0
    hbar: float = 1.0
    v0: float = 0.0
    v1: float = 1.0
    v2: float = 0.0

    # Спектр
    scan_step: float = 0.01  # шаг сканирования по a
    root_xtol: float = 1e-12  # точность бисекции корней
    root_validity_tol: float = 1e-8  # допуск проверки корня в bound_wavefunction

    # Специальные функции
    hermite_asymptotic_threshold: float = 6.0  # выше: асимптотика (2z)^ν
    kummer_series_limit: float = 30.0  # |z| до которого суммируется ряд

    # Аналитические решения
    near_origin_cutoff: float = 1e-8  # ниже x формула не вычисляется
    decay_threshold: float = 1e-3  # допустимый хвост |ψ|/max|ψ| для нормировки

    # Численный оракул (стрельба Нумерова)
    shooting_x_start: float = 1e-4
    shooting_x_end_factor: float = 3.0  # x_end = factor × внешняя точка поворота
    shooting_steps: int = 20000
    shooting_energy_tol: float = 1e-10
    shooting_max_bisections: int = 200
    shooting_decay_exponent: float = 20.0  # WKB-затухание хвоста для таблиц ψ и резервного x_end
    shooting_check_step: bool = False  # контрольный прогон с шагом h/2

    # Вывод
    output_precision: int = 17  # значащих цифр
    output_format: str = "csv"  # 'csv' или 'json'

    # Logging
    log_level: str = "INFO"  # DEBUG показывает трассировку вызовов решателей
    log_dir: str = "logs"
    log_to_file: bool = False


settings = Settings()
