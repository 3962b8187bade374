import pytest

from finframe.builders import b4, c3, f5


@pytest.fixture
def C3():
    return c3()


@pytest.fixture
def B4():
    return b4()


@pytest.fixture
def F5():
    return f5()
