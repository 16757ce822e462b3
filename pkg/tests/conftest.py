"""
Test configuration for the fivec-drawing toolkit.
"""

import os
import pytest

from src.core.config import get_settings
from src.planar_map.io import load_rotation_system
from src.triangulation5.generator import generate_random_5c
from src.triangulation5.triangulation import check_five_triangulation

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# sizes and seeds of the small generated batch
GENERATED = [(11, 1), (12, 2), (14, 3), (17, 4), (20, 5), (25, 6), (30, 7)]

# the wider batch used by the drawing certificates
WIDE = [(n, 1000 + n) for n in range(31, 151, 7)]


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the large-instance timing tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large-instance timing test, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def fixture_dir() -> str:
    """FIVEC_FIXTURE_DIR; a relative directory is taken from the repository root."""
    configured = get_settings().FIVEC_FIXTURE_DIR
    return configured if os.path.isabs(configured) else os.path.join(ROOT_DIR, configured)


def fixture_path(name: str) -> str:
    return os.path.join(fixture_dir(), f"{name}.json")


def load_fixture(name: str):
    """A fixture file as a FiveTriangulation, with its symmetry attached."""
    document = load_rotation_system(fixture_path(name))
    return check_five_triangulation(document.to_map(), document.outer, document.symmetry)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; tests that set FIVEC_* variables need a clean cache."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def w5():
    """The wheel W5: outer pentagon 0..4 around the hub 5."""
    return load_fixture("w5")


@pytest.fixture
def icosa11():
    """Icosahedron minus a vertex: ring 5..9 and hub 10, with its rotation."""
    return load_fixture("icosa11")


@pytest.fixture
def non5c():
    """W5 with a degree-3 vertex stacked in the face (0, 1, 5)."""
    return load_fixture("non5c")


@pytest.fixture(scope="session")
def generated():
    """Small 5c-triangulations from fixed seeds."""
    return [generate_random_5c(n, seed, flips=n) for n, seed in GENERATED]


@pytest.fixture(scope="session")
def wide_batch():
    """5c-triangulations with 31 to 150 vertices from fixed seeds."""
    return [generate_random_5c(n, seed, flips=n) for n, seed in WIDE]


@pytest.fixture
def instances(w5, icosa11, generated):
    return [w5, icosa11] + list(generated)
