import pytest

from dualform.catalog import group_by_name
from dualform.concrete import GroupModel
from dualform.groups import make_group
from dualform.rings import RingModel, ring_product, zmod


@pytest.fixture(scope="session")
def grp():
    return GroupModel()


@pytest.fixture(scope="session")
def ring():
    return RingModel()


@pytest.fixture(scope="session")
def Z2():
    return make_group("cyclic", 2)


@pytest.fixture(scope="session")
def Z4():
    return make_group("cyclic", 4)


@pytest.fixture(scope="session")
def S3():
    return group_by_name("S3")


@pytest.fixture(scope="session")
def parity(grp, Z4, Z2):
    return grp.morphism(Z4, Z2, [0, 1, 0, 1])


@pytest.fixture(scope="session")
def Z6r():
    return zmod(6)


@pytest.fixture(scope="session")
def V4r():
    Z2 = zmod(2)
    return ring_product(Z2, Z2, "Z2xZ2")


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
