import pytest

from alcove_hecke.engine import build_engine

SEMISIMPLE = ["A1_adj", "A2_adj", "B2_adj", "A1xA1_adj"]

_cache = {}


def engine_for(preset):
    if preset not in _cache:
        _cache[preset] = build_engine(preset)
    return _cache[preset]


@pytest.fixture(scope="session")
def a1():
    return engine_for("A1_adj")


@pytest.fixture(scope="session")
def a2():
    return engine_for("A2_adj")


@pytest.fixture(scope="session")
def b2():
    return engine_for("B2_adj")


@pytest.fixture(scope="session", params=SEMISIMPLE)
def any_engine(request):
    return engine_for(request.param)
