import pathlib

import pytest

from c5cone import read_curve

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

_cache = {}


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def load():
    """Cached fixture loader: load('space_cusp') -> Curve."""

    def _load(name):
        if name not in _cache:
            _cache[name] = read_curve(FIXTURES / f"{name}.json")
        return _cache[name]

    return _load


@pytest.fixture(scope="session")
def fixture_names():
    return sorted(p.stem for p in FIXTURES.glob("*.json"))
