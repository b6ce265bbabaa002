import sys
from pathlib import Path

import pytest
from loguru import logger

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import settings
from src.app.models.thermal import ExchangerGeometry
from src.app.parsers.scenario_loader import load_scenario

SCENARIO_DIR = project_root / "data" / "scenarios"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size swarm runs on the default scenario")


@pytest.fixture(autouse=True)
def console_only_logging(monkeypatch):
    """Keep test runs out of logs/ and quiet on the console."""
    monkeypatch.setattr(settings, "LOG_TO_FILE", False)
    logger.remove()
    logger.add(sys.stderr, level="WARNING")
    yield


@pytest.fixture
def geometry() -> ExchangerGeometry:
    return ExchangerGeometry(
        area=100.0,
        d_outer=0.025,
        d_inner=0.02,
        wall_conductivity=45.0,
        h_tube=1000.0,
        h_shell=1200.0,
    )


@pytest.fixture(scope="session")
def default_scenario_path() -> str:
    return str(SCENARIO_DIR / "scenario_11he.json")


@pytest.fixture(scope="session")
def small_scenario_path() -> str:
    return str(SCENARIO_DIR / "scenario_2he.json")


@pytest.fixture(scope="session")
def default_scenario(default_scenario_path):
    return load_scenario(default_scenario_path)


@pytest.fixture(scope="session")
def small_scenario(small_scenario_path):
    return load_scenario(small_scenario_path)
