"""
Тесты настроек: переменные окружения HEUN_* и значения по умолчанию
"""

import json

import pytest
from pydantic import ValidationError

from src.cli.app import main
from src.core.config import Settings
from src.oracle import ShootingConfig


class TestSettings:
    """Settings из окружения"""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("HEUN_SCAN_STEP", raising=False)
        s = Settings(_env_file=None)
        assert s.scan_step == 0.01
        assert s.shooting_steps == 20000
        assert s.output_precision == 17

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("HEUN_SCAN_STEP", "0.005")
        monkeypatch.setenv("HEUN_SHOOTING_STEPS", "40000")
        s = Settings(_env_file=None)
        assert s.scan_step == 0.005
        assert s.shooting_steps == 40000

    def test_case_insensitive(self, monkeypatch):
        monkeypatch.setenv("heun_v1", "2.5")
        assert Settings(_env_file=None).v1 == 2.5

    def test_invalid_value(self, monkeypatch):
        monkeypatch.setenv("HEUN_SHOOTING_STEPS", "много")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


class TestDerivedConfig:
    """Модели, берущие значения по умолчанию из settings"""

    def test_cli_defaults_follow_settings(self, monkeypatch, capsys):
        """Значения HEUN_* становятся параметрами CLI по умолчанию"""
        monkeypatch.setattr("src.cli.app.settings", Settings(_env_file=None, v1=2.0))
        assert main(["levels", "--n-max", "1", "--method", "closed-form", "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)[0]
        assert record["E_n"] == pytest.approx(16.0 * -32.0 / 3.0 ** (2.0 / 3.0), rel=1e-12)

    def test_shooting_config_defaults(self):
        config = ShootingConfig()
        assert config.x_start == 1e-4
        assert config.x_end is None
        assert config.x_end_factor == 3.0
