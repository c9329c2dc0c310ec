import json

import pytest

from token_covers.report import Evidence, VerificationReport


def test_fail_requires_counterexample():
    with pytest.raises(ValueError):
        VerificationReport("x", False, "fail", (Evidence("a", 1),))
    rep = VerificationReport("x", False, "fail",
                             (Evidence("bad", (0, 1), kind="counterexample"),))
    assert not rep.passed


def test_from_outcome_status():
    assert VerificationReport.from_outcome("x", True).status == "pass"
    rep = VerificationReport.from_outcome(
        "x", False, [Evidence("bad", 0, kind="counterexample")])
    assert rep.status == "fail"


def test_json_shape_and_determinism():
    rep = VerificationReport.from_outcome("demo", True, [Evidence("count", 3)])
    payload = json.loads(rep.to_json())
    assert payload["schema_version"] == 1
    assert payload["name"] == "demo"
    assert payload["evidence"] == [{"label": "count", "value": 3, "kind": "info"}]
    assert rep.to_json() == VerificationReport.from_outcome(
        "demo", True, [Evidence("count", 3)]).to_json()


def test_find():
    rep = VerificationReport.from_outcome("demo", True, [Evidence("count", 3)])
    assert rep.find("count") == 3
    with pytest.raises(KeyError):
        rep.find("missing")
