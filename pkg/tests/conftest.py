import functools

import pytest

from rennermonoids import RennerMonoid


@functools.lru_cache(maxsize=None)
def build_engine(family: str, rank: int) -> RennerMonoid:
    return RennerMonoid(family, rank)


@pytest.fixture(scope="session")
def engine():
    """Memoized engine factory shared by the whole suite."""
    return build_engine
