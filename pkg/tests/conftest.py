from functools import lru_cache

import pytest

from excrystal.affine import kr_crystal


@lru_cache(maxsize=None)
def _kr(kind, r, s):
    return kr_crystal(kind, r, s)


@pytest.fixture(scope="session")
def kr():
    """Memoized ``kr_crystal`` shared by all test modules."""
    return _kr
