import pytest

from thetainv.catalog import lattice_by_name
from thetainv.lattice import enumerate_shells, validate_lattice


@pytest.fixture(scope="session")
def e8():
    return lattice_by_name("e8")


@pytest.fixture(scope="session")
def e8_shells6(e8):
    # shared across theta and acceptance tests; the norm-6 enumeration is the
    # most expensive fixture in the suite
    return enumerate_shells(e8, 6)


@pytest.fixture(scope="session")
def a2():
    return lattice_by_name("a2")


@pytest.fixture(scope="session")
def d4():
    return lattice_by_name("d4")


@pytest.fixture(scope="session")
def skew2():
    return validate_lattice([[2, 1], [1, 4]], name="skew2")


@pytest.fixture(scope="session")
def skew3():
    return validate_lattice([[2, 1, 0], [1, 4, 1], [0, 1, 6]], name="skew3")


@pytest.fixture(scope="session")
def diag246():
    return validate_lattice([[2, 0, 0], [0, 4, 0], [0, 0, 6]], name="diag246")
