import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdcrit import enumerate_connected, profile_stream


@pytest.fixture(scope="session")
def connected_upto_7():
    graphs = []
    for n in range(1, 8):
        graphs.extend(enumerate_connected(n))
    return graphs


@pytest.fixture(scope="session")
def profiles_upto_7(connected_upto_7):
    return profile_stream(connected_upto_7, workers=1)
