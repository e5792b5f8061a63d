import pytest

from garside import bundled
from garside.monoid import GarsideStructure


@pytest.fixture(scope="session")
def g12() -> GarsideStructure:
    return bundled.get_structure("g12")


@pytest.fixture(scope="session")
def g13() -> GarsideStructure:
    return bundled.get_structure("g13")


@pytest.fixture(scope="session")
def b2() -> GarsideStructure:
    return bundled.get_structure("typeb2")


@pytest.fixture(scope="session")
def b3() -> GarsideStructure:
    return bundled.get_structure("typeb3")
