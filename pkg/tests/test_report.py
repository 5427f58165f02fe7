import json

import pytest

from config import SearchLimits
from reports.report import (
    CheckStatus,
    build_verification_report,
    load_report,
    render_report,
    write_report,
)
from utils.errors import ReportSchemaError, ReportWriteError


def test_report_for_2x2(tmp_path):
    report = build_verification_report(2)
    assert report.passed
    assert len(report.lemma2) == 9
    assert all(c.status == CheckStatus.PASS for c in report.lemma2)
    assert [c.name for c in report.lemma1] == ["g1 in Aut", "g2 in Aut", "g3 in Aut", "g4 in Aut"]
    assert report.transport.pairs_checked == 16 * 16
    assert report.brute_force.aut_order is not None


def test_report_for_3x3():
    report = build_verification_report(3)
    assert report.lemma3.H_order == 9
    assert report.lemma3.K_order == 4
    assert report.lemma3.G_order == 36
    assert report.theorem.connection_set_size == 3
    assert report.passed


def test_large_sections_are_skipped():
    report = build_verification_report(5, SearchLimits(aut_vertex_cap=16))
    assert report.transport.pairs_checked == 0
    assert all(c.status == CheckStatus.SKIPPED for c in report.transport.checks)
    assert all(c.status == CheckStatus.SKIPPED for c in report.brute_force.checks)
    assert report.passed


def test_round_trip_and_stable_layout(tmp_path):
    report = build_verification_report(2)
    path = tmp_path / "report.json"
    write_report(report, path)
    loaded = load_report(path)
    assert loaded == report
    assert render_report(loaded) == path.read_text(encoding="utf-8")
    keys = list(json.loads(path.read_text())["params"])
    assert keys == ["m", "n"]


def test_unknown_major_version_is_rejected(tmp_path):
    data = json.loads(render_report(build_verification_report(1)))
    data["schema_version"] = "2.0"
    path = tmp_path / "future.json"
    path.write_text(json.dumps(data))
    with pytest.raises(ReportSchemaError):
        load_report(path)


def test_write_failure(tmp_path):
    report = build_verification_report(1)
    with pytest.raises(ReportWriteError):
        write_report(report, tmp_path / "missing" / "report.json")
