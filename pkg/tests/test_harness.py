import json

import pytest

from schmidt.harness import (
    refined_csv,
    refined_json,
    refined_report,
    refined_text,
    table_pairs,
    table_text,
    verify_csv,
    verify_json,
    verify_report,
    verify_text,
)


def test_table_text():
    assert table_text(0) == ""
    assert table_text(1) == "1r <-> 1+1\n1g <-> 1"
    assert len(table_pairs(3)) == 10


def test_verify_report_values():
    report = verify_report(3)
    assert report.ok and report.witness is None
    by_n = {r.n: r for r in report.records}
    assert (by_n[3].s_count, by_n[3].t_count, by_n[3].series_count) == (10, 10, 10)
    assert by_n[1].round_trip_checked == 4
    assert by_n[3].round_trip_checked == 20


def test_verify_report_cutoff():
    report = verify_report(4, roundtrip_cutoff=2)
    by_n = {r.n: r for r in report.records}
    assert by_n[2].round_trip_checked == 10
    assert by_n[3].round_trip_checked == 0
    assert report.ok


def test_verify_report_rejects_bad_bounds():
    with pytest.raises(ValueError):
        verify_report(0)
    with pytest.raises(ValueError):
        verify_report(3, roundtrip_cutoff=-1)


def test_verify_renderings():
    report = verify_report(2)
    assert verify_text(report).splitlines()[0] == "n=1 s=2 t=2 series=2 roundtrips=4 ok"
    assert verify_text(report).splitlines()[-1].startswith("PASS")
    csv = verify_csv(report).splitlines()
    assert csv[0] == "n,s,t,series,pass"
    assert csv[1] == "1,2,2,2,true"
    data = json.loads(verify_json(report))
    assert data["pass"] is True
    assert data["records"][0] == {
        "n": 1,
        "s_count": 2,
        "t_count": 2,
        "series_count": 2,
        "round_trip_checked": 4,
        "pass": True,
    }


def test_refined_report_witness_row():
    report = refined_report(2, 1, 1, 1, 1)
    assert report.ok
    row = {(r.n, r.r, r.l, r.p, r.q): r for r in report.records}[(2, 1, 1, 1, 1)]
    assert row.t_refined == 1
    assert row.s_literal == 3
    assert row.transported_count == 1
    assert row.literal_match is False
    assert row.transported_match is True


def test_refined_report_grid_shape_and_order():
    report = refined_report(2, 2, 2, 2, 2)
    keys = [(r.n, r.r, r.l, r.p, r.q) for r in report.records]
    assert len(keys) == 2 * 16
    assert keys == sorted(keys)


def test_refined_renderings():
    report = refined_report(2, 1, 1, 1, 1)
    lines = refined_csv(report).splitlines()
    assert lines[0] == "n,r,l,p,q,t_refined,s_literal,transported,literal_match"
    assert "2,1,1,1,1,1,3,1,false" in lines
    text = refined_text(report)
    assert "t_refined=1 s_literal=3 transported=1" in text
    data = json.loads(refined_json(report))
    assert data["pass"] is True
    assert data["records"][-1]["transported_match"] is True


def test_reports_are_reproducible():
    first = refined_report(4, 2, 2, 2, 2)
    second = refined_report(4, 2, 2, 2, 2)
    assert first == second
    assert refined_csv(first) == refined_csv(second)
    assert verify_csv(verify_report(5)) == verify_csv(verify_report(5))
