import os
import random
import sys

import pytest

# Add the src directory to the Python path, as run_verifier.py does
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra.hurwitz import enumerate_tuple_classes  # noqa: E402
from algebra.winger import WingerPencil, irregular_orbits, reconstruct_group  # noqa: E402


@pytest.fixture(scope="session")
def group():
    return reconstruct_group()


@pytest.fixture(scope="session")
def orbits(group):
    return irregular_orbits(group)


@pytest.fixture(scope="session")
def pencil():
    return WingerPencil()


@pytest.fixture(scope="session")
def tuple_classes():
    return enumerate_tuple_classes()


@pytest.fixture
def rng():
    return random.Random(1234)
