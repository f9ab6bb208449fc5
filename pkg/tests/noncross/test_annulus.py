import pytest

from annular_nc.errors import UnsupportedReferenceError
from annular_nc.noncross import (
    AnnulusConfig,
    GroundPermutation,
    ac_test_perm,
    is_gamma_connected,
    restrict_to_circle,
)


def test_annulus_config_splits_points(annulus_2_2):
    # Assert
    assert annulus_2_2.outer == frozenset({1, 2, -1, -2})
    assert annulus_2_2.inner == frozenset({3, 4, -3, -4})


def test_annulus_config_gamma_has_two_cycles(annulus_2_2):
    # Act
    cycles = annulus_2_2.gamma.cycles()

    # Assert
    assert cycles == ((1, 2, -1, -2), (3, 4, -3, -4))


def test_annulus_config_rejects_empty_outer_circle():
    # Act & Assert
    with pytest.raises(ValueError, match="need p >= 1"):
        AnnulusConfig(0, 2)


def test_disc_config_has_one_circle():
    # Act
    disc = AnnulusConfig.disc(3)

    # Assert
    assert disc.is_disc
    assert disc.inner == frozenset()
    assert str(disc.gamma) == "(1,2,3,-1,-2,-3)"


def test_ac_test_perm_joins_the_circles(annulus_2_2):
    # Act
    lam = ac_test_perm(annulus_2_2.gamma, 1, 3)

    # Assert
    assert str(lam) == "(2,-1,-2,4,-3,-4)"
    assert lam(1) == 1
    assert lam(3) == 3


def test_ac_test_perm_rejects_same_circle(annulus_2_2):
    # Act & Assert
    with pytest.raises(ValueError, match="same circle"):
        ac_test_perm(annulus_2_2.gamma, 1, 2)


def test_ac_test_perm_rejects_disc_reference():
    # Act & Assert
    with pytest.raises(UnsupportedReferenceError, match="two-cycle reference"):
        ac_test_perm(AnnulusConfig.disc(2).gamma, 1, 2)


def test_is_gamma_connected(annulus_4_2):
    # Assert
    assert is_gamma_connected({1, 5}, annulus_4_2)
    assert not is_gamma_connected({1, 2, -1}, annulus_4_2)


def test_restrict_to_circle_inner(six_point_tau, annulus_4_2):
    # Act
    tau_z, gamma_z = restrict_to_circle(six_point_tau.to_ground(), annulus_4_2, "Z")

    # Assert
    assert tau_z == GroundPermutation.identity([5, 6, -5, -6])
    assert str(gamma_z) == "(5,6,-5,-6)"


def test_restrict_to_circle_outer(six_point_tau, annulus_4_2):
    # Act
    tau_y, _ = restrict_to_circle(six_point_tau.to_ground(), annulus_4_2, "Y")

    # Assert
    assert str(tau_y) == "(1,2,3)(-1,-2,-3)"
