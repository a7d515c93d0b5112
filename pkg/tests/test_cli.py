import math
import subprocess
import sys

import pytest

from windubins.cli import CSV_HEADER, run
from windubins.geometry import mod2pi

from conftest import CASE1_WIND

EXACT_WIND_FLAG = f"{CASE1_WIND[0]!r},{CASE1_WIND[1]!r}"


def run_cli(capsys, *argv):
    status = run(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_plan_case1_rounded_flags(capsys):
    status, out, err = run_cli(
        capsys, "plan", "--wind", "0.475,-0.155", "--target", "5,-2",
        "--theta-f-deg", "72", "--rho", "1",
    )
    assert status == 0
    first = out.splitlines()[0]
    assert "best=LSL" in first
    t_f = float(first.split("t_f=")[1].split()[0])
    assert abs(t_f - 7.5294) < 1e-2
    winners = [line for line in out.splitlines() if line.startswith("*")]
    assert len(winners) == 1 and winners[0].startswith("*LSL")


def test_plan_case1_exact_wind(capsys):
    status, out, _ = run_cli(
        capsys, "plan", "--wind", EXACT_WIND_FLAG, "--target", "5,-2",
        "--theta-f-deg", "72", "--rho", "1",
    )
    assert status == 0
    t_f = float(out.splitlines()[0].split("t_f=")[1].split()[0])
    assert abs(t_f - 7.5294) < 1e-3


def test_plan_zero_wind_straight(capsys):
    status, out, _ = run_cli(
        capsys, "plan", "--wind", "0,0", "--target", "0,10",
        "--theta-f-deg", "90", "--rho", "1",
    )
    assert status == 0
    assert out.startswith("t_f=10.000000")


def test_plan_with_start_pose(capsys):
    status, out, _ = run_cli(
        capsys, "plan", "--wind", "0,0", "--target", "10,0",
        "--theta-f-deg", "0", "--rho", "1", "--start", "0,0,0",
    )
    assert status == 0
    assert out.startswith("t_f=10.000000")


def test_invalid_wind_magnitude(capsys):
    status, out, err = run_cli(
        capsys, "plan", "--wind", "1.2,0", "--target", "1,1",
        "--theta-f-deg", "0", "--rho", "1",
    )
    assert status == 1
    assert "--wind" in err


def test_invalid_rho(capsys):
    status, _, err = run_cli(
        capsys, "plan", "--wind", "0,0", "--target", "1,1",
        "--theta-f-deg", "0", "--rho", "-1",
    )
    assert status == 1
    assert "rho" in err


def test_non_numeric_target(capsys):
    status, _, err = run_cli(
        capsys, "plan", "--wind", "0,0", "--target", "1,abc",
        "--theta-f-deg", "0", "--rho", "1",
    )
    assert status == 1
    assert "target" in err


def test_unknown_flag(capsys):
    status, _, err = run_cli(
        capsys, "plan", "--wind", "0,0", "--target", "1,1",
        "--theta-f-deg", "0", "--rho", "1", "--frobnicate", "3",
    )
    assert status == 1
    assert "frobnicate" in err


def test_no_feasible_candidate_exit_code(capsys):
    status, out, err = run_cli(
        capsys, "plan", "--wind", "0.3,0.1", "--target", "4,2",
        "--theta-f-deg", "30", "--rho", "1", "--residual-tol", "1e-30",
    )
    assert status == 2
    assert "no feasible candidate" in err
    assert out == ""


def test_csv_output_schema_and_roundtrip(capsys):
    status, out, _ = run_cli(
        capsys, "plan", "--wind", EXACT_WIND_FLAG, "--target", "5,-2",
        "--theta-f-deg", "72", "--rho", "1", "--output", "csv",
        "--sample-dt", "0.25",
    )
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0] == CSV_HEADER
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    # Re-integrating the control column between consecutive rows reproduces
    # the pose columns (switch times appear as explicit rows).
    rho = 1.0
    for prev, cur in zip(rows[:-1], rows[1:]):
        t0, x0, y0, th0, u0 = prev[0], prev[1], prev[2], prev[3], prev[4]
        dt = cur[0] - t0
        if u0 == 0:
            x1 = x0 + dt * math.cos(th0)
            y1 = y0 + dt * math.sin(th0)
            th1 = th0
        else:
            cx = x0 - u0 * rho * math.sin(th0)
            cy = y0 + u0 * rho * math.cos(th0)
            th1 = th0 + u0 * dt / rho
            x1 = cx + u0 * rho * math.sin(th1)
            y1 = cy - u0 * rho * math.cos(th1)
        assert math.hypot(x1 - cur[1], y1 - cur[2]) < 1e-9
        assert abs(mod2pi(th1) - cur[3]) % (2 * math.pi) < 1e-9
    # Inertial columns are relative plus wind drift.
    for r in rows:
        assert abs(r[5] - (r[1] + r[0] * CASE1_WIND[0])) < 1e-9
        assert abs(r[6] - (r[2] + r[0] * CASE1_WIND[1])) < 1e-9


def test_output_both_and_file(tmp_path, capsys):
    out_path = tmp_path / "result.txt"
    status, out, _ = run_cli(
        capsys, "plan", "--wind", "0,0", "--target", "0,10",
        "--theta-f-deg", "90", "--rho", "1", "--output", "both",
        "--out", str(out_path),
    )
    assert status == 0
    assert out == ""
    text = out_path.read_text()
    assert text.startswith("t_f=10.000000")
    assert CSV_HEADER in text


def test_deterministic_output(capsys):
    argv = ["plan", "--wind", "0.2,-0.1", "--target", "3,4",
            "--theta-f-deg", "10", "--rho", "0.7", "--output", "both"]
    s1, out1, _ = run_cli(capsys, *argv)
    s2, out2, _ = run_cli(capsys, *argv)
    assert s1 == s2 == 0
    assert out1 == out2


def test_batch_mode(tmp_path, capsys):
    path = tmp_path / "scenarios.txt"
    path.write_text(
        "# one scenario per line: wx wy X Y theta_f_deg rho\n"
        "0 0 0 10 90 1\n"
        "0.2 -0.1 3 4 10 0.7\n"
        "0.475 -0.155 5 -2 72 1  # trailing comment\n"
    )
    status, out, _ = run_cli(capsys, "batch", str(path))
    assert status == 0
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 3
    assert out.count("# scenario") == 3


def test_batch_csv_blocks(tmp_path, capsys):
    path = tmp_path / "scenarios.txt"
    path.write_text("0 0 0 10 90 1\n0 0 5 5 0 1\n0.1 0 2 2 45 1\n")
    status, out, _ = run_cli(capsys, "batch", str(path), "--output", "csv")
    assert status == 0
    assert out.count(CSV_HEADER) == 3


def test_batch_bad_line(tmp_path, capsys):
    path = tmp_path / "scenarios.txt"
    path.write_text("0 0 0 10 90\n")
    status, _, err = run_cli(capsys, "batch", str(path))
    assert status == 1
    assert "line 1" in err


def test_batch_missing_file(capsys):
    status, _, err = run_cli(capsys, "batch", "/nonexistent/file.txt")
    assert status == 1
    assert "cannot read" in err


def test_selftest_passes(capsys):
    status, out, _ = run_cli(capsys, "selftest")
    assert status == 0
    assert "FAIL" not in out
    assert out.count("ok:") >= 4


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "windubins.cli", "plan", "--wind", "0,0",
         "--target", "0,10", "--theta-f-deg", "90", "--rho", "1"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("t_f=10.000000")
