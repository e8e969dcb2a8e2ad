from __future__ import annotations

import pytest

from htschur.verify import SUITES, report_dict, report_text, run_suite


def test_all_suites_pass():
    checks = run_suite("all", 8)
    assert {c.suite for c in checks} == set(SUITES)
    assert [c.name for c in checks if not c.passed] == []
    report = report_dict("all", 8, checks)
    assert report["passed"] and report["n_checks"] == len(checks)
    assert report_text(checks).endswith(f"{len(checks)}/{len(checks)} checks passed")


def test_crashing_check_is_reported_as_failure(monkeypatch):
    from htschur import verify

    def boom(order):
        return [verify._run("tables", "boom", lambda: 1 / 0)]

    monkeypatch.setitem(verify._SUITE_FUNCS, "tables", boom)
    (check,) = run_suite("tables")
    assert not check.passed
    assert "ZeroDivisionError" in check.detail


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nosuch")
