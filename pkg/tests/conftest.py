import pytest

from projrich.coxeter import weyl_group
from projrich.root_data import build_root_system


@pytest.fixture(scope="session")
def A2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def B2():
    return build_root_system("B", 2)


@pytest.fixture(scope="session")
def WA2(A2):
    return weyl_group(A2)


@pytest.fixture(scope="session")
def WB2(B2):
    return weyl_group(B2)
