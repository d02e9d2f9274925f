import pytest

from helpers import central_example, medical_example, observable_not_strong_example, union_example


@pytest.fixture
def central():
    return central_example()


@pytest.fixture
def obs_not_strong():
    return observable_not_strong_example()


@pytest.fixture
def union_pair():
    return union_example()


@pytest.fixture
def medical():
    return medical_example()
