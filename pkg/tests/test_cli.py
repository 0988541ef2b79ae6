import subprocess
import sys
from pathlib import Path

import pytest

from schmidt.cli import main
from schmidt.harness import VerifyRecord, VerifyReport

GOLDEN_TABLE = Path(__file__).parent / "data" / "table_n3.txt"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "colored,plain",
    [("2r+1g", "3+2"), ("3g", "3"), ("1r+1g+1g", "2+2+1")],
)
def test_map(capsys, colored, plain):
    code, out, _ = run_cli(capsys, "map", colored)
    assert code == 0
    assert out == plain + "\n"


@pytest.mark.parametrize(
    "plain,colored",
    [("1+1+1+1+1", "1g+1g+1g"), ("3+1", "2g+1r"), ("0", "0")],
)
def test_unmap(capsys, plain, colored):
    code, out, _ = run_cli(capsys, "unmap", plain)
    assert code == 0
    assert out == colored + "\n"


@pytest.mark.parametrize(
    "argv",
    [("map", "2x"), ("unmap", "1+2"), ("render", "3q")],
)
def test_parse_failures_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_table_matches_golden(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "3")
    assert code == 0
    assert out == GOLDEN_TABLE.read_text()


def test_table_weight_zero_is_empty(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "0")
    assert code == 0
    assert out == ""


def test_table_rejects_negative(capsys):
    code, _, err = run_cli(capsys, "table", "--n", "-1")
    assert code == 2
    assert err


def test_verify_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert "n=3 s=10 t=10 series=10 roundtrips=20 ok" in lines
    assert lines[-1].startswith("PASS")


def test_verify_rejects_bad_bounds(capsys):
    assert run_cli(capsys, "verify", "--max-n", "0")[0] == 2
    assert run_cli(capsys, "verify", "--max-n", "3", "--roundtrip-cutoff", "-1")[0] == 2


def test_verify_failure_exits_1(capsys, monkeypatch):
    broken = VerifyReport(
        max_n=1,
        roundtrip_cutoff=12,
        records=(
            VerifyRecord(
                n=1, s_count=2, t_count=3, series_count=2, round_trip_checked=0, ok=False
            ),
        ),
        ok=False,
        witness="n=1: s=2 t=3 series=2",
    )
    monkeypatch.setattr("schmidt.harness.verify_report", lambda *a, **k: broken)
    code, out, _ = run_cli(capsys, "verify", "--max-n", "1")
    assert code == 1
    assert "FAIL: n=1" in out


def test_verify_csv_deterministic(capsys):
    first = run_cli(capsys, "verify", "--max-n", "4", "--format", "csv")
    second = run_cli(capsys, "verify", "--max-n", "4", "--format", "csv")
    assert first == second
    assert first[1].splitlines()[0] == "n,s,t,series,pass"


def test_refined_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "refined",
        "--max-n", "2", "--max-r", "1", "--max-l", "1", "--max-p", "1", "--max-q", "1",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == [
        "n,r,l,p,q,t_refined,s_literal,transported,literal_match",
        "1,1,1,1,1,0,2,0,false",
        "2,1,1,1,1,1,3,1,false",
    ]


def test_refined_rejects_bad_bounds(capsys):
    assert run_cli(capsys, "refined", "--max-n", "0")[0] == 2


def test_render_full_pipeline(capsys):
    code, out, _ = run_cli(capsys, "render", "3g+2g+1g+1r+1r")
    assert code == 0
    assert out == (
        "input: 3g+2g+1g+1r+1r\n"
        "red: 1+1\n"
        "green: 3+2+1\n"
        "arms: 3 2 0\n"
        "legs: 5 3 1\n"
        "shape: 4 4 3 3 2 1\n"
        "diagram:\n"
        "2 2 2 1\n"
        "2 2 2 1\n"
        "2 2 1\n"
        "2 2 1\n"
        "2 1\n"
        "1\n"
        "hooks: 9 7 6 4 2 0\n"
        "schmidt: 4+3+3+2+1\n"
    )


def test_render_single_red(capsys):
    code, out, _ = run_cli(capsys, "render", "3r")
    assert code == 0
    assert out == (
        "input: 3r\n"
        "red: 3\n"
        "green: 0\n"
        "arms: 3\n"
        "legs: 0\n"
        "shape: 4\n"
        "diagram:\n"
        "2 2 2 1\n"
        "hooks: 4 3\n"
        "schmidt: 3+3\n"
    )


def test_render_smallest_and_empty(capsys):
    code, out, _ = run_cli(capsys, "render", "1r")
    assert code == 0
    assert "schmidt: 1+1" in out
    code, out, _ = run_cli(capsys, "render", "0")
    assert code == 0
    assert out == "input: 0\nred: 0\ngreen: 0\nschmidt: 0\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schmidt", "map", "2r+1g"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "3+2\n"
