import pytest

from annular_nc.errors import RankMismatchError
from annular_nc.groups import enumerate_B, parse_cycles
from annular_nc.partitions import (
    SignedPartition,
    le_refinement,
    meet,
    omega,
    omega_tilde,
    refinement_matrix,
    zero_blocks,
)


def test_signed_partition_is_canonical():
    # Act
    first = SignedPartition.from_blocks(2, [[-1, 2], [-2, 1]])
    second = SignedPartition.from_blocks(2, [[1, -2], [2, -1]])

    # Assert
    assert first == second
    assert first.blocks == ((1, -2), (2, -1))


def test_signed_partition_rejects_missing_point():
    # Act & Assert
    with pytest.raises(ValueError, match="do not partition"):
        SignedPartition.from_blocks(2, [[1, 2], [-1]])


def test_signed_partition_block_of():
    # Arrange
    pi = SignedPartition.from_blocks(2, [[1, -1], [2], [-2]])

    # Act & Assert
    assert pi.block_of(-1) == frozenset({1, -1})


def test_signed_partition_is_symmetric():
    # Assert
    assert SignedPartition.singletons(2).is_symmetric
    assert not SignedPartition.from_blocks(2, [[1, 2], [-1], [-2]]).is_symmetric


def test_signed_partition_str(six_point_tau):
    # Act
    text = str(omega(six_point_tau))

    # Assert
    assert text == "{1,2,3,5}{4,-6}{6,-4}{-1,-2,-3,-5}"


def test_signed_partition_json(six_point_tau):
    # Arrange
    pi = omega(six_point_tau)

    # Act
    data = pi.to_json()

    # Assert
    assert data == {"n": 6, "blocks": [[1, 2, 3, 5], [4, -6], [6, -4], [-1, -2, -3, -5]]}
    assert SignedPartition.from_json(data) == pi


def test_signed_partition_from_json_text():
    # Act
    pi = SignedPartition.from_json('{"n": 1, "blocks": [[1, -1]]}')

    # Assert
    assert pi == SignedPartition.full(1)


def test_omega_tilde_merges_zero_orbits():
    # Arrange
    minus_identity = parse_cycles("(1,-1)(2,-2)", 2)

    # Act
    merged = omega_tilde(minus_identity)

    # Assert
    assert str(merged) == "{1,2,-1,-2}"
    assert len(omega(minus_identity)) == 2


def test_omega_tilde_equals_omega_without_zero_orbits(six_point_tau):
    # Act & Assert
    assert omega_tilde(six_point_tau) == omega(six_point_tau)


def test_zero_blocks():
    # Arrange
    pi = SignedPartition.from_blocks(3, [[1, -1], [2, 3], [-2, -3]])

    # Act & Assert
    assert zero_blocks(pi) == (frozenset({1, -1}),)


def test_le_refinement_singletons_below_full():
    # Arrange
    bottom = SignedPartition.singletons(2)
    top = SignedPartition.full(2)

    # Assert
    assert le_refinement(bottom, top)
    assert not le_refinement(top, bottom)


def test_le_refinement_rejects_rank_mismatch():
    # Act & Assert
    with pytest.raises(RankMismatchError, match="rank mismatch"):
        le_refinement(SignedPartition.singletons(1), SignedPartition.singletons(2))


def test_meet_is_idempotent(six_point_tau):
    # Arrange
    pi = omega(six_point_tau)

    # Act & Assert
    assert meet(pi, pi) == pi


def test_meet_with_singletons():
    # Arrange
    pi = SignedPartition.full(2)

    # Act & Assert
    assert meet(pi, SignedPartition.singletons(2)) == SignedPartition.singletons(2)


def test_meet_of_counterexample_pair():
    # Arrange
    pi = omega(parse_cycles("(1,2,3,4)", 4))
    rho = omega(parse_cycles("(1,-4,3,-2)", 4))

    # Act
    nu = meet(pi, rho)

    # Assert
    assert str(nu) == "{1,3}{2,4}{-1,-3}{-2,-4}"


def test_meet_of_symmetric_partitions_is_symmetric():
    # Arrange
    partitions = {omega(tau) for tau in enumerate_B(3)}

    # Act
    asymmetric = [
        (pi, rho) for pi in partitions for rho in partitions if not meet(pi, rho).is_symmetric
    ]

    # Assert
    assert asymmetric == []


def test_refinement_matrix_matches_le_refinement():
    # Arrange
    partitions = sorted({omega(tau) for tau in enumerate_B(2)}, key=str)

    # Act
    leq = refinement_matrix(partitions)

    # Assert
    assert leq.tolist() == [[le_refinement(a, b) for b in partitions] for a in partitions]
