import json

import pytest

from annular_nc.models import ReportCollector, VerificationReport


def test_verification_report_failed_needs_witness():
    # Act & Assert
    with pytest.raises(ValueError, match="needs a witness"):
        VerificationReport(theorem="B-lattice", params={"n": 3}, passed=False)


def test_verification_report_json_without_elapsed():
    # Arrange
    report = VerificationReport("B-lattice", {"n": 3}, True, counts={"pairs": 10}, elapsed_ms=12.5)

    # Act
    data = json.loads(report.dumps(include_elapsed=False))

    # Assert
    assert data == {
        "theorem": "B-lattice",
        "params": {"n": 3},
        "passed": True,
        "counts": {"pairs": 10},
        "witness": None,
    }


def test_verification_report_summary():
    # Arrange
    report = VerificationReport("B-interval", {"p": 2, "q": 1}, True, elapsed_ms=1500)

    # Act & Assert
    assert report.summary() == "B-interval(p=2, q=1): passed in 1.50s"


def test_report_collector_passes_without_failures():
    # Arrange
    collector = ReportCollector("B-interval", p=1, q=1)
    collector.count("elements")
    collector.count("elements")

    # Act
    report = collector.report()

    # Assert
    assert report.passed
    assert report.counts == {"elements": 2}
    assert report.params == {"p": 1, "q": 1}


def test_report_collector_keeps_first_failure():
    # Arrange
    collector = ReportCollector("B-interval", p=1, q=1)

    # Act
    first = collector.check(False, "genus-vs-order", element="(1,-1)")
    collector.check(False, "complement", element="id")
    report = collector.report()

    # Assert
    assert first is False
    assert not report.passed
    assert report.witness == {"check": "genus-vs-order", "element": "(1,-1)"}
    assert report.counts["failures"] == 2


def test_report_collector_set_count_overwrites():
    # Arrange
    collector = ReportCollector("B-lattice", n=2)
    collector.count("pairs", 3)

    # Act
    collector.set_count("pairs", 7)

    # Assert
    assert collector.report().counts == {"pairs": 7}


def test_verification_report_from_json_round_trip():
    # Arrange
    report = VerificationReport(
        "B-isomorphism",
        {"p": 2, "q": 1},
        False,
        counts={"elements": 20, "failures": 1},
        witness={"check": "order-isomorphism", "pair": ["id", "(1,-1)"]},
        details={"moebius": -3},
    )

    # Act
    restored = VerificationReport.from_json(report.dumps(include_elapsed=False))

    # Assert
    assert restored == report


def test_verification_report_from_json_accepts_dict():
    # Arrange
    data = {"theorem": "B-lattice", "params": {"n": 3}, "passed": True, "counts": {}, "witness": None}

    # Act
    report = VerificationReport.from_json(data)

    # Assert
    assert report.passed
    assert report.details == {}
    assert report.to_json(include_elapsed=False) == data


def test_verification_report_from_json_rejects_failure_without_witness():
    # Act & Assert
    with pytest.raises(ValueError, match="needs a witness"):
        VerificationReport.from_json(
            {"theorem": "B-lattice", "params": {"n": 3}, "passed": False, "counts": {}, "witness": None}
        )
