import pytest

from liecenter import invariants, liealg


@pytest.fixture(scope="session")
def g2b():
    return liealg.g2_borel()


@pytest.fixture(scope="session")
def g2n(g2b):
    return liealg.nilradical_table(g2b)


@pytest.fixture(scope="session")
def f4b():
    return liealg.f4_borel()


@pytest.fixture(scope="session")
def f4n(f4b):
    return liealg.nilradical_table(f4b)


@pytest.fixture(scope="session")
def g2b_fam(g2b):
    return invariants.g2_invariants(g2b)


@pytest.fixture(scope="session")
def g2n_fam(g2n):
    return invariants.g2_invariants(g2n)


@pytest.fixture(scope="session")
def f4b_fam(f4b):
    return invariants.f4_invariants(f4b)


@pytest.fixture(scope="session")
def f4n_fam(f4n):
    return invariants.f4_invariants(f4n)


@pytest.fixture(scope="session")
def c2_pair():
    return liealg.cn_borel(2)


@pytest.fixture(scope="session")
def c3_pair():
    return liealg.cn_borel(3)


def abelian_table(dim=4):
    """A nilpotent abelian algebra on labels y1..ydim, for trivial cases."""
    from liecenter.exactalg import VarRegistry

    registry = VarRegistry([f"y{i}" for i in range(1, dim + 1)])
    return liealg.StructureTable("abelian-test", registry, {}, (), range(dim))
