import pytest

from annular_nc.config import Settings
from annular_nc.groups import SignedPermutation, parse_cycles
from annular_nc.noncross import AnnulusConfig


@pytest.fixture
def settings():
    """Defaults, independent of ANNULAR_NC_BOUND in the calling shell."""
    return Settings()


@pytest.fixture
def annulus_4_2():
    return AnnulusConfig(4, 2)


@pytest.fixture
def annulus_2_2():
    return AnnulusConfig(2, 2)


@pytest.fixture
def annulus_1_1():
    return AnnulusConfig(1, 1)


@pytest.fixture
def six_point_tau():
    """A member of S^B_nc(4, 2) with a connected orbit and a connected pair."""
    return parse_cycles("(1,2,3,5)(4,-6)", 6)


@pytest.fixture
def gamma_1_1(annulus_1_1):
    return SignedPermutation.from_ground(annulus_1_1.gamma)


@pytest.fixture
def gamma_4_2(annulus_4_2):
    return SignedPermutation.from_ground(annulus_4_2.gamma)


@pytest.fixture
def broken_order(monkeypatch):
    """Models built while tau <= gamma always answers False."""
    from annular_nc.models import annular

    annular._cached_model.cache_clear()
    monkeypatch.setattr(annular, "le_B", lambda *args: False)
    yield
    annular._cached_model.cache_clear()
