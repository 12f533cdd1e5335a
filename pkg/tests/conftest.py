import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from azumaya.fields import QQ, PrimeField
from azumaya.en_family import EnParams, build_en


@pytest.fixture(scope="session")
def e1():
    return build_en(1, QQ)


@pytest.fixture(scope="session")
def e2():
    return build_en(2, QQ)


@pytest.fixture(scope="session")
def e3():
    return build_en(3, QQ)


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


def params1(alpha, gamma, lam, t=1, field=QQ):
    """E(1) parameter point (scalar gamma and lambda)."""
    return EnParams(field, 1, ((t,),), alpha, (gamma,), ((lam,),))
