import json

import pytest

from annular_nc.posets import FinitePoset
from annular_nc.visualization import hasse_to_dot, hasse_to_json


@pytest.fixture
def chain():
    return FinitePoset.build(['x"1', "y", "z"], lambda a, b: a <= b)


def test_hasse_to_dot_draws_bottom_up(chain):
    # Act
    dot = hasse_to_dot(chain)

    # Assert
    assert dot.startswith("digraph hasse {\n\trankdir = BT;")
    assert '\t"0" -> "1";' in dot
    assert '\t"1" -> "2";' in dot
    assert dot.endswith("}\n")


def test_hasse_to_dot_escapes_labels(chain):
    # Act
    dot = hasse_to_dot(chain)

    # Assert
    assert '[label="x\\"1"]' in dot


def test_hasse_to_dot_groups_equal_ranks():
    # Arrange
    divisors = FinitePoset.build([1, 2, 3, 6], lambda a, b: b % a == 0)
    rank = {1: 0, 2: 1, 3: 1, 6: 2}.__getitem__

    # Act
    dot = hasse_to_dot(divisors, rank=rank, name="divisors")

    # Assert
    assert dot.startswith("digraph divisors {")
    assert dot.count("rank = same;") == 3
    assert '\t\t"1" [label="2"];\n\t\t"2" [label="3"];' in dot


def test_hasse_to_json(chain):
    # Act
    data = json.loads(hasse_to_json(chain))

    # Assert
    assert data == {"elements": ['x"1', "y", "z"], "covers": [[0, 1], [1, 2]]}
