import pytest

from coinduce.decomp import triangular
from coinduce.liealg import build_gl, build_gl11, build_simply_laced


@pytest.fixture(scope="session")
def sl2():
    return build_simply_laced("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_simply_laced("A", 2)


@pytest.fixture(scope="session")
def d4():
    return build_simply_laced("D", 4)


@pytest.fixture(scope="session")
def gl2():
    return build_gl(2)


@pytest.fixture(scope="session")
def gl3():
    return build_gl(3)


@pytest.fixture(scope="session")
def gl11():
    return build_gl11()


@pytest.fixture(scope="session")
def sl2_tri(sl2):
    return triangular(sl2)


@pytest.fixture(scope="session")
def a2_tri(a2):
    return triangular(a2)


@pytest.fixture(scope="session")
def gl11_tri(gl11):
    return triangular(gl11)
