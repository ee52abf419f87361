import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def table():
    from torusk33.planar_networks import load_table
    return load_table(7)
