import pytest

from walsh_lab import make_field


@pytest.fixture(scope="session")
def field4():
    return make_field(4)


@pytest.fixture(scope="session")
def field6():
    return make_field(6)


@pytest.fixture(scope="session")
def field8():
    return make_field(8)


@pytest.fixture(scope="session")
def field12():
    return make_field(12)
