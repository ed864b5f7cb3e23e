import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from realflag.catalog import build_pair, _parabolic_for
from realflag.realforms import get_algebra


@pytest.fixture(scope="session")
def sl2():
    return get_algebra("sl2")


@pytest.fixture(scope="session")
def so14():
    return get_algebra("so(1,4)")


@pytest.fixture(scope="session")
def su12():
    return get_algebra("su(1,2)")


@pytest.fixture(scope="session")
def sp12():
    return get_algebra("sp(1,2)")


@pytest.fixture(scope="session")
def f4bundle():
    from realflag.jordan import f4_bundle
    return f4_bundle()


@pytest.fixture(scope="session")
def pair():
    """Catalog pair builder (parabolics cached per ambient)."""
    return build_pair


@pytest.fixture(scope="session")
def parabolic_of():
    return _parabolic_for
