import pytest

from rssifit import embedded_dataset


@pytest.fixture(scope="session")
def longwall():
    return embedded_dataset("longwall-face").stats


@pytest.fixture(scope="session")
def gateroad():
    return embedded_dataset("gateroad-conveyor").stats
