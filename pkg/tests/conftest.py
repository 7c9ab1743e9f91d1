import pytest

from pistair import sieve


@pytest.fixture(scope="session")
def table3k():
    return sieve(3000)


@pytest.fixture(scope="session")
def table100k():
    return sieve(100_000)


@pytest.fixture(scope="session")
def bigtable():
    # covers p_1000000 = 15485863 and the full d_n sweep to 10^6
    return sieve(16_000_000)
