import numpy as np
import pytest

from annular_nc.config import Settings
from annular_nc.errors import BoundExceededError, NotInGroupError, RankMismatchError
from annular_nc.groups import (
    SignedPermutation,
    absolute_order_matrix,
    compose,
    covers_B,
    enumerate_B,
    enumerate_D,
    inverse,
    is_gamma_connected_perm,
    is_in_D,
    le_B,
    le_D,
    length_B,
    length_B_oracle,
    length_D_oracle,
    lengths_B,
    orbits,
    parse_cycles,
    reflections_B,
    reflections_D,
)


def test_signed_permutation_rejects_bad_images():
    # Act & Assert
    with pytest.raises(ValueError, match="is not the image vector"):
        SignedPermutation((1, -1))


def test_signed_permutation_call_respects_sign_symmetry():
    # Arrange
    tau = SignedPermutation((-2, 1))

    # Act & Assert
    assert tau(1) == -2
    assert tau(-1) == 2
    assert tau(-2) == -1


def test_from_mapping_fills_mirror_and_fixed_points():
    # Act
    tau = SignedPermutation.from_mapping({1: 2, 2: 1}, 3)

    # Assert
    assert tau.images == (2, 1, 3)


def test_from_mapping_rejects_inconsistent_mirror():
    # Act & Assert
    with pytest.raises(ValueError, match="mapping sends"):
        SignedPermutation.from_mapping({1: 2, -1: 2}, 2)


def test_compose_applies_right_factor_first():
    # Arrange
    sigma = parse_cycles("(1,2)", 2)
    tau = parse_cycles("(1,-1)", 2)

    # Act
    product = compose(sigma, tau)

    # Assert
    assert product(1) == -2
    assert product(2) == 1


def test_compose_rejects_rank_mismatch():
    # Act & Assert
    with pytest.raises(RankMismatchError, match="rank mismatch"):
        compose(SignedPermutation.identity(2), SignedPermutation.identity(3))


def test_inverse_of_six_point_permutation(six_point_tau):
    # Act
    result = inverse(six_point_tau)

    # Assert
    assert str(result) == "(1,5,3,2)(4,-6)(-1,-5,-3,-2)(-4,6)"


def test_inverse_composes_to_identity(six_point_tau):
    # Act
    product = six_point_tau * six_point_tau.inverse()

    # Assert
    assert product.is_identity


def test_orbits_flags_zero_orbits():
    # Arrange
    tau = parse_cycles("(1,-1)(2,3)", 3)

    # Act
    orbit_set = orbits(tau)

    # Assert
    assert orbit_set.zero_blocks == (frozenset({1, -1}),)
    assert orbit_set.pair_count == 1
    assert len(orbit_set) == 3


def test_length_B_of_identity_is_zero():
    # Assert
    assert length_B(SignedPermutation.identity(4)) == 0


def test_length_B_of_six_point_permutation(six_point_tau):
    # Assert
    assert length_B(six_point_tau) == 4


def test_length_B_of_minus_identity_is_rank():
    # Arrange
    minus_identity = SignedPermutation((-1, -2, -3))

    # Assert
    assert length_B(minus_identity) == 3


def test_reflections_have_expected_counts():
    # Assert
    assert len(reflections_B(3)) == 9
    assert len(reflections_D(3)) == 6


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_length_B_matches_word_length_oracle(n, settings):
    # Arrange
    group = list(enumerate_B(n))

    # Act
    mismatches = [tau for tau in group if length_B(tau) != length_B_oracle(tau, settings)]

    # Assert
    assert mismatches == []


def test_length_B_oracle_respects_bound():
    # Act & Assert
    with pytest.raises(BoundExceededError, match="oracle rank = 3 exceeds the bound 2"):
        length_B_oracle(SignedPermutation.identity(3), Settings(oracle_bound=2))


def test_is_in_D_sign_parity():
    # Assert
    assert is_in_D(SignedPermutation((-1, -2)))
    assert not is_in_D(SignedPermutation((-1, 2)))


def test_length_D_oracle_rejects_odd_sign_change():
    # Act & Assert
    with pytest.raises(NotInGroupError, match="is not in D_2"):
        length_D_oracle(SignedPermutation((-1, 2)))


def test_length_D_oracle_of_minus_identity(settings):
    # Assert
    assert length_D_oracle(SignedPermutation((-1, -2)), settings) == 2


def test_le_B_identity_is_below_everything(six_point_tau):
    # Assert
    assert le_B(SignedPermutation.identity(6), six_point_tau)


def test_le_B_sign_change_below_annulus_gamma(gamma_1_1):
    # Arrange
    sign_change = parse_cycles("(1,-1)", 2)

    # Assert
    assert le_B(sign_change, gamma_1_1)
    assert not le_B(gamma_1_1, sign_change)


def test_le_B_four_cycle_not_below_annulus_gamma(gamma_1_1):
    # Arrange
    four_cycle = parse_cycles("(1,2,-1,-2)", 2)

    # Assert
    assert not le_B(four_cycle, gamma_1_1)


def test_le_B_is_partial_order_on_B_3():
    # Arrange
    group = list(enumerate_B(3))

    # Act
    leq = absolute_order_matrix(group)

    # Assert
    assert leq.diagonal().all()
    assert ((leq & leq.T).sum()) == len(group)
    closure = (leq.astype(int) @ leq.astype(int)) > 0
    assert not (closure & ~leq).any()


def test_le_D_on_D_2(settings):
    # Arrange
    transposition = parse_cycles("(1,2)", 2)
    minus_identity = SignedPermutation((-1, -2))

    # Assert
    assert le_D(transposition, minus_identity, settings)
    assert not le_D(minus_identity, transposition, settings)


@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_length_D_oracle_matches_length_B(n, settings):
    # Act
    mismatches = [tau for tau in enumerate_D(n) if length_D_oracle(tau, settings) != length_B(tau)]

    # Assert
    assert mismatches == []


@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_le_D_agrees_with_le_B_on_D_n(n, settings):
    # Arrange
    group = list(enumerate_D(n))

    # Act
    disagreements = [
        (sigma, tau)
        for sigma in group
        for tau in group
        if le_D(sigma, tau, settings) != le_B(sigma, tau)
    ]

    # Assert
    assert disagreements == []


def test_length_B_of_quotient_is_symmetric_on_B_3():
    # Arrange
    group = list(enumerate_B(3))

    # Act
    asymmetric = [
        (sigma, tau)
        for sigma in group
        for tau in group
        if length_B(compose(inverse(sigma), tau)) != length_B(compose(inverse(tau), sigma))
    ]

    # Assert
    assert asymmetric == []


def test_length_B_is_conjugation_invariant_on_B_3():
    # Arrange
    group = list(enumerate_B(3))

    # Act
    changed = [
        (sigma, tau)
        for sigma in group
        for tau in group
        if length_B(compose(compose(sigma, tau), inverse(sigma))) != length_B(tau)
    ]

    # Assert
    assert changed == []


def test_covers_B_sign_change_over_identity():
    # Assert
    assert covers_B(SignedPermutation.identity(1), SignedPermutation((-1,)))


def test_covers_B_rejects_rank_two_step(gamma_1_1):
    # Assert
    assert not covers_B(SignedPermutation.identity(2), gamma_1_1)


def test_covers_B_sign_change_in_other_orbit(gamma_1_1):
    # Assert
    assert covers_B(parse_cycles("(1,-1)", 2), gamma_1_1)


def test_covers_B_merges_zero_orbit_with_pair():
    # Arrange
    sign_change = parse_cycles("(1,-1)", 2)
    four_cycle = parse_cycles("(1,2,-1,-2)", 2)

    # Assert
    assert covers_B(sign_change, four_cycle)


def test_covers_B_agrees_with_lengths_on_B_3():
    # Arrange
    group = list(enumerate_B(3))
    leq = absolute_order_matrix(group)
    lengths = lengths_B(group)

    # Act
    mismatches = [
        (s, t)
        for s in range(len(group))
        for t in range(len(group))
        if covers_B(group[s], group[t]) != bool(leq[s, t] and lengths[t] == lengths[s] + 1)
    ]

    # Assert
    assert mismatches == []


def test_enumerate_B_rank_one_in_canonical_order():
    # Act
    group = list(enumerate_B(1))

    # Assert
    assert group == [SignedPermutation((1,)), SignedPermutation((-1,))]


@pytest.mark.parametrize("n, size", [(2, 8), (3, 48), (4, 384)])
def test_enumerate_B_sizes(n, size):
    # Act & Assert
    assert sum(1 for _ in enumerate_B(n)) == size


def test_enumerate_B_is_sorted():
    # Arrange
    group = list(enumerate_B(3))

    # Assert
    assert group == sorted(group, key=lambda t: t.sort_key)
    assert group[0].is_identity


def test_enumerate_B_prefix_restricts_first_image():
    # Act
    chunk = list(enumerate_B(3, prefix=(-2,)))

    # Assert
    assert len(chunk) == 8
    assert all(tau.images[0] == -2 for tau in chunk)


def test_enumerate_B_rejects_rank_above_cap():
    # Act & Assert
    with pytest.raises(BoundExceededError, match="rank 8 outside"):
        next(enumerate_B(8))


def test_enumerate_D_has_half_the_elements():
    # Act & Assert
    assert sum(1 for _ in enumerate_D(3)) == 24


def test_lengths_B_matches_scalar_lengths():
    # Arrange
    group = list(enumerate_B(3))

    # Act
    lengths = lengths_B(group)

    # Assert
    assert np.array_equal(lengths, [length_B(tau) for tau in group])


def test_absolute_order_matrix_matches_le_B():
    # Arrange
    group = list(enumerate_B(2))

    # Act
    leq = absolute_order_matrix(group)

    # Assert
    expected = [[le_B(s, t) for t in group] for s in group]
    assert leq.tolist() == expected


def test_is_gamma_connected_perm(six_point_tau):
    # Assert
    assert is_gamma_connected_perm(six_point_tau, 4)
    assert not is_gamma_connected_perm(parse_cycles("(1,2)", 6), 4)


def test_to_json_lists_moved_cycles(six_point_tau):
    # Act
    data = six_point_tau.to_json()

    # Assert
    assert data == {"n": 6, "cycles": [[1, 2, 3, 5], [4, -6], [6, -4], [-1, -2, -3, -5]]}
