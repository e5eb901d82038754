import pytest

from octad.scalars import ZZ
from octad.zorn import zorn_algebra
from octad.her3 import her3
from octad.tits import split_albert


@pytest.fixture(scope="session")
def her3_zorn_zz():
    return her3(zorn_algebra(ZZ))


@pytest.fixture(scope="session")
def albert_zz():
    return split_albert(ZZ)
