import json
from fractions import Fraction

import pytest

from utils import ClaimRecord, ClaimReport, load_report, save_report, to_jsonable


def test_unknown_status():
    with pytest.raises(ValueError):
        ClaimRecord("x", "desc", "maybe", {"a": 1})


def test_pass_needs_a_witness():
    with pytest.raises(ValueError):
        ClaimRecord("x", "desc", "pass", {})
    assert ClaimRecord("x", "desc", "skipped", "").status == "skipped"


def test_duplicate_ids():
    report = ClaimReport("rtl")
    report.add(ClaimRecord("x", "desc", "pass", {"a": 1}))
    with pytest.raises(ValueError):
        report.add(ClaimRecord("x", "other", "fail", "boom"))


def test_exit_code_and_counts():
    report = ClaimReport("rtl")
    report.add(ClaimRecord("a", "desc", "pass", [1]))
    report.add(ClaimRecord("b", "desc", "skipped", "slow"))
    assert report.exit_code() == 0
    report.add(ClaimRecord("c", "desc", "fail", "wrong"))
    assert report.exit_code() == 1
    assert report.counts() == {"pass": 1, "fail": 1, "skipped": 1}
    assert [c.id for c in report.failed()] == ["c"]


def test_json_shape():
    report = ClaimReport("ltr")
    report.add(ClaimRecord("a", "desc", "pass", {"lambda": Fraction(27, 5)}, millis=12))
    data = json.loads(report.to_json())
    assert set(data) == {"version", "convention", "claims"}
    assert data["convention"] == "ltr"
    assert data["claims"][0] == {"id": "a", "description": "desc", "status": "pass",
                                 "witness": {"lambda": "27/5"}, "millis": 12}


def test_save_and_load(tmp_path):
    report = ClaimReport("rtl")
    report.add(ClaimRecord("a", "desc", "pass", {"sizes": {6: 6}}))
    path = tmp_path / "out" / "report.json"
    save_report(report, str(path))
    loaded = load_report(str(path))
    assert loaded == json.loads(report.to_json())
    assert loaded["claims"][0]["witness"] == {"sizes": {"6": 6}}


def test_load_missing_report(tmp_path):
    assert load_report(str(tmp_path / "nope.json")) == {}


def test_to_jsonable():
    assert to_jsonable({1: {Fraction(1, 2), Fraction(-1)}}) == {"1": ["-1", "1/2"]}
    assert to_jsonable((True, None, 3)) == [True, None, 3]
