import pytest
from hypothesis import HealthCheck, settings

from hopfcross.catalog import line_nilpotent, line_semisimple, sweedler4
from hopfcross.fields import GF, QQ, FieldSpec

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F3():
    return GF(3)


@pytest.fixture(scope="session")
def F5():
    return GF(5)


@pytest.fixture(scope="session")
def Q():
    return QQ


@pytest.fixture(scope="session")
def F3X():
    return FieldSpec.from_flag("f3(X1)")


@pytest.fixture(scope="session")
def H4_3(F3):
    return sweedler4(F3)


@pytest.fixture(scope="session")
def L0(F3):
    return line_nilpotent(3, F3)


@pytest.fixture(scope="session")
def L1(F3):
    return line_semisimple(3, F3)
