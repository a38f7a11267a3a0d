import json

import pytest

from sepcurves.suites import (
    SUITE_NAMES,
    CheckRecord,
    SuiteReport,
    check,
    run_suite,
    skip,
)


def test_check_records():
    ok = check("a", 1, 1, "TRIVIAL")
    bad = check("b", 1, 2, "PAPER")
    assert ok.status == "pass" and ok.witness is None
    assert bad.status == "fail" and bad.witness == {"expected": 1, "actual": 2}
    assert check("c", "x", "y", "PAPER", ok=True).status == "pass"
    assert skip("d", "why").to_dict()["note"] == "why"


def test_report_status():
    rep = SuiteReport("x", 3, [skip("a", "r")])
    assert rep.status == "skip" and rep.ok
    rep.checks.append(check("b", 1, 1, "TRIVIAL"))
    assert rep.status == "pass"
    rep.checks.append(check("c", 1, 0, "TRIVIAL"))
    assert rep.status == "fail" and not rep.ok
    assert rep.summary() == {"pass": 1, "fail": 1, "skip": 1}
    d = json.loads(rep.to_json())
    assert "duration" not in d and d["suite"] == "x"


def test_run_suite_rejects():
    with pytest.raises(ValueError):
        run_suite("nope", 3)
    with pytest.raises(ValueError):
        run_suite("chain", 8)


def test_suite_names():
    assert "all" in SUITE_NAMES and "sec7" in SUITE_NAMES


def test_genus_three_tables_suite():
    rep = run_suite("sec7", 3)
    assert rep.status == "pass", [c.to_dict() for c in rep.checks if c.status == "fail"]


def test_sec7_skips_elsewhere():
    assert run_suite("sec7", 4).status == "skip"
