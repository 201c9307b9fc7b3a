import pytest

from skillab import gen_grouped, gen_library, gen_tasks


@pytest.fixture(scope="session")
def small_library():
    return gen_library(12, "mixed", "simple", seed=7)


@pytest.fixture(scope="session")
def small_tasks(small_library):
    return gen_tasks(small_library, 2, seed=7)


@pytest.fixture(scope="session")
def grouped_library():
    return gen_grouped(4, seed=3)
