import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from demorgan.catalog import (
    enumerate_categories,
    enumerate_frames,
    enumerate_heyting_algebras,
)
from demorgan.fixtures import category_fixtures, frame_fixtures
from demorgan.topology import enumerate_topologies

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fixtures():
    return category_fixtures()


@pytest.fixture(scope="session")
def frames():
    return frame_fixtures()


@pytest.fixture(scope="session")
def catalog3():
    return enumerate_categories(3)


@pytest.fixture(scope="session")
def catalog4():
    return enumerate_categories(4)


@pytest.fixture(scope="session")
def site_enumeration(catalog4):
    """Every catalog category paired with all of its topologies."""
    return [(C, enumerate_topologies(C)) for C in catalog4]


@pytest.fixture(scope="session")
def heyting_catalog():
    return enumerate_heyting_algebras(8)


@pytest.fixture(scope="session")
def frame_catalog():
    return enumerate_frames(8)
