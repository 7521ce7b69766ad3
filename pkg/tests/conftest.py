import pytest

from src.model.params import PhysParams
from src.oracle.shooting import eigenvalues_numeric
from src.spectrum.service import exact_levels


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: полный прогон validate (около минуты); пропуск: -m \"not slow\"")


@pytest.fixture(scope="session")
def unit_params():
    """m = ħ = 1, V0 = 0, V1 = 1, V2 = 0"""
    return PhysParams()


@pytest.fixture(scope="session")
def exact_spectrum(unit_params):
    """Первые 10 точных уровней (считаются один раз за сессию)"""
    return exact_levels(unit_params, 10)


@pytest.fixture(scope="session")
def oracle_spectrum(unit_params):
    """Первые 5 уровней оракула"""
    return eigenvalues_numeric(unit_params, 5)
