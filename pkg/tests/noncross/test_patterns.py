from itertools import permutations

import pytest

from annular_nc.errors import UnsupportedReferenceError
from annular_nc.groups import enumerate_B, parse_cycles
from annular_nc.noncross import (
    AnnulusConfig,
    CrossingWitness,
    GroundPermutation,
    WitnessKind,
    check_compatible,
    find_crossing_pattern,
    genus,
    is_noncrossing_by_patterns,
)


def test_check_compatible_gamma_with_itself(annulus_4_2):
    # Act & Assert
    assert check_compatible(annulus_4_2.gamma, annulus_4_2.gamma) is None


def test_check_compatible_six_point(six_point_tau, annulus_4_2):
    # Act & Assert
    assert check_compatible(six_point_tau.to_ground(), annulus_4_2.gamma) is None


def test_check_compatible_sign_change_on_annulus(annulus_1_1):
    # Arrange
    sign_change = parse_cycles("(1,-1)", 2).to_ground()

    # Act & Assert
    assert check_compatible(sign_change, annulus_1_1.gamma) is None


def test_check_compatible_disc_order_reversed():
    # Arrange
    gamma = AnnulusConfig.disc(2).gamma
    tau = parse_cycles("(1,-2,-1,2)", 2).to_ground()

    # Act
    witness = check_compatible(tau, gamma)

    # Assert
    assert witness == CrossingWitness(
        WitnessKind.INCOMPATIBLE, (1, 2, -1, -2), "clause (i): order differs from gamma"
    )


def test_check_compatible_annulus_circle_order_reversed():
    # Arrange
    cfg = AnnulusConfig(3, 1)
    tau = parse_cycles("(1,3,2)", 4).to_ground()

    # Act
    witness = check_compatible(tau, cfg.gamma)

    # Assert
    assert witness.kind is WitnessKind.INCOMPATIBLE
    assert witness.points == (1, 2, 3)
    assert witness.detail == "clause (i): order on A∩Y differs from gamma"


def test_check_compatible_annulus_two_jumps(annulus_2_2):
    # Arrange
    tau = parse_cycles("(1,3,2,4)", 4).to_ground()

    # Act
    witness = check_compatible(tau, annulus_2_2.gamma)

    # Assert
    assert witness.kind is WitnessKind.INCOMPATIBLE
    assert witness.points == (1, 2, 3, 4)
    assert witness.detail == "clause (ii): 2 jumps from Y to Z"


def test_check_compatible_rejects_three_cycle_reference():
    # Arrange
    gamma = GroundPermutation.from_cycles([(1, 2), (3, 4), (5, 6)], range(1, 7))

    # Act & Assert
    with pytest.raises(UnsupportedReferenceError, match="at most 2 are supported"):
        check_compatible(GroundPermutation.identity(range(1, 7)), gamma)


def test_find_crossing_pattern_disc_crossing():
    # Arrange
    gamma = AnnulusConfig.disc(2).gamma
    minus_identity = parse_cycles("(1,-1)(2,-2)", 2).to_ground()

    # Act
    witness = find_crossing_pattern(minus_identity, gamma)

    # Assert
    assert witness == CrossingWitness(WitnessKind.DC, (1, 2, -1, -2))


def test_find_crossing_pattern_none_for_six_point(six_point_tau, annulus_4_2):
    # Act & Assert
    assert find_crossing_pattern(six_point_tau.to_ground(), annulus_4_2.gamma) is None


def test_find_crossing_pattern_ac3_for_rebuilt_meet(annulus_2_2):
    # Arrange
    tau = parse_cycles("(1,3)(2,4)", 4).to_ground()

    # Act
    witness = find_crossing_pattern(tau, annulus_2_2.gamma)

    # Assert
    assert witness == CrossingWitness(WitnessKind.AC3, (1, 2, 3, 4, -1, -3))


def test_crossing_witness_json_keeps_detail():
    # Arrange
    witness = CrossingWitness(WitnessKind.INCOMPATIBLE, (1, 2), "clause (ii): 2 jumps from Y to Z")

    # Act
    data = witness.to_json()

    # Assert
    assert data == {"kind": "INCOMPATIBLE", "points": [1, 2], "detail": "clause (ii): 2 jumps from Y to Z"}
    assert CrossingWitness.from_json(data) == witness


@pytest.mark.parametrize("n", [1, 2, 3])
def test_patterns_agree_with_genus_on_disc(n):
    # Arrange
    gamma = AnnulusConfig.disc(n).gamma

    # Act
    disagreements = [
        tau
        for tau in enumerate_B(n)
        if is_noncrossing_by_patterns(tau.to_ground(), gamma) != (genus(tau.to_ground(), gamma) == 0)
    ]

    # Assert
    assert disagreements == []


@pytest.mark.parametrize(
    "p, q",
    [
        (1, 1),
        (2, 1),
        (1, 2),
        pytest.param(2, 2, marks=pytest.mark.slow),
        pytest.param(3, 1, marks=pytest.mark.slow),
    ],
)
def test_patterns_agree_with_genus_on_annulus(p, q):
    # Arrange
    cfg = AnnulusConfig(p, q)

    # Act
    disagreements = [
        tau
        for tau in enumerate_B(cfg.n)
        if is_noncrossing_by_patterns(tau.to_ground(), cfg.gamma)
        != (genus(tau.to_ground(), cfg.gamma) == 0)
    ]

    # Assert
    assert disagreements == []


def _ground_disagreements(gamma: GroundPermutation) -> list[GroundPermutation]:
    points = gamma.points
    disagreements = []
    for images in permutations(points):
        tau = GroundPermutation(points, images)
        if is_noncrossing_by_patterns(tau, gamma) != (genus(tau, gamma) == 0):
            disagreements.append(tau)
    return disagreements


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_patterns_agree_with_genus_on_every_disc_permutation(k):
    # Arrange
    gamma = GroundPermutation.from_cycles([range(1, k + 1)], range(1, k + 1))

    # Act & Assert
    assert _ground_disagreements(gamma) == []


@pytest.mark.parametrize(
    "outer, inner",
    [
        (1, 1),
        (2, 1),
        (2, 2),
        (3, 2),
        pytest.param(3, 3, marks=pytest.mark.slow),
        pytest.param(4, 3, marks=pytest.mark.slow),
        pytest.param(5, 2, marks=pytest.mark.slow),
    ],
)
def test_patterns_agree_with_genus_on_every_annulus_permutation(outer, inner):
    # Arrange
    k = outer + inner
    gamma = GroundPermutation.from_cycles(
        [range(1, outer + 1), range(outer + 1, k + 1)], range(1, k + 1)
    )

    # Act & Assert
    assert _ground_disagreements(gamma) == []
