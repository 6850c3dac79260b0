"""CLI behavior: output formats, exit codes, determinism, fault detection."""

import numpy as np
import pytest

from fasthough import patterns
from fasthough.cli import main
from fasthough.pgm import write_pgm
from fasthough.rng import random_image


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- fht -------------------------------------------------------------------------


def test_fht_all_ones(tmp_path, capsys):
    path = tmp_path / "ones.pgm"
    write_pgm(path, np.ones((4, 4), dtype=int))
    code, out, _ = run(capsys, "fht", str(path), "--quadrant", "hr")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,s,value"
    assert "0,0,4" in lines
    assert len(lines) == 1 + 4 * 7


def test_fht_zero_image(tmp_path, capsys):
    path = tmp_path / "zero.pgm"
    write_pgm(path, np.zeros((4, 4), dtype=int))
    code, out, _ = run(capsys, "fht", str(path))
    assert code == 0
    assert all(line.endswith(",0") for line in out.splitlines()[1:])


def test_fht_rejects_bad_dimensions(tmp_path, capsys):
    path = tmp_path / "odd.pgm"
    write_pgm(path, np.ones((5, 5), dtype=int))
    code, _, err = run(capsys, "fht", str(path))
    assert code == 2 and "power of two" in err


def test_fht_unreadable_file(capsys):
    code, _, err = run(capsys, "fht", "/no/such/file.pgm")
    assert code == 1 and "error" in err


def test_fht_all_quadrants(tmp_path, capsys):
    path = tmp_path / "img.pgm"
    write_pgm(path, random_image(4, 5))
    out_base = tmp_path / "acc.csv"
    code, out, _ = run(capsys, "fht", str(path), "--quadrant", "all",
                       "--out", str(out_base))
    assert code == 0
    for tag in ("hr", "hl", "vr", "vl"):
        f = tmp_path / f"acc.{tag}.csv"
        assert str(f) in out
        assert f.read_text().startswith("t,s,value\n")


def test_fht_all_requires_out(tmp_path, capsys):
    path = tmp_path / "img.pgm"
    write_pgm(path, random_image(4, 5))
    code, _, err = run(capsys, "fht", str(path), "--quadrant", "all")
    assert code == 2 and "--out" in err


# -- pattern ----------------------------------------------------------------------


def test_pattern_output_and_method_agreement(capsys):
    expected = None
    for method in ("bitsum", "recursive", "cumulative"):
        code, out, _ = run(capsys, "pattern", "--p", "3", "--t", "5",
                           "--method", method)
        assert code == 0
        assert out.splitlines()[0] == "x,y"
        expected = expected or out
        assert out == expected
    assert out.splitlines()[1:] == [f"{x},{y}" for x, y in
                                    enumerate((0, 1, 1, 2, 3, 4, 4, 5))]


def test_pattern_bad_slope(capsys):
    code, _, err = run(capsys, "pattern", "--p", "2", "--t", "9")
    assert code == 2 and "slope" in err


# -- error scans --------------------------------------------------------------------


@pytest.mark.parametrize("p,summary", [
    (4, "4,10,15,0.666666666667"),
    (2, "2,1,3,0.333333333333"),
    (3, "3,3,7,0.428571428571"),
])
def test_error_scan_summary(capsys, p, summary):
    code, out, _ = run(capsys, "error-scan", "--p", str(p))
    assert code == 0
    assert out.strip() == summary


def test_error_scan_profile_file(tmp_path, capsys):
    out_path = tmp_path / "profile.csv"
    code, _, _ = run(capsys, "error-scan", "--p", "3", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "t,num,den,approx"
    assert lines[1] == "0,0,7,0"
    assert len(lines) == 9
    assert lines[2] == "1,3,7,0.428571428571"


def test_error_scan_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("FHT_MAX_P", "3")
    code, _, err = run(capsys, "error-scan", "--p", "4")
    assert code == 2 and "cap" in err


def test_error_scan_worker_determinism(tmp_path, capsys):
    files = []
    for workers in ("1", "3"):
        out_path = tmp_path / f"profile{workers}.csv"
        code, out, _ = run(capsys, "error-scan", "--p", "5",
                           "--out", str(out_path), "--workers", workers)
        assert code == 0
        files.append(out_path.read_bytes() + out.encode())
    assert files[0] == files[1]


def test_error_hist_output(tmp_path, capsys):
    out_path = tmp_path / "hist.csv"
    code, _, _ = run(capsys, "error-hist", "--p", "4", "--bins", "5",
                     "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "bin_lo,bin_hi,count"
    assert len(lines) == 6
    counts = [int(line.split(",")[2]) for line in lines[1:]]
    assert sum(counts) == 256
    assert counts == counts[::-1]
    assert lines[1].startswith("-2,-1.2,")


def test_workers_validation(capsys):
    code, _, err = run(capsys, "error-scan", "--p", "3", "--workers", "0")
    assert code == 2 and "workers" in err


# -- maximizer and spin table ---------------------------------------------------------


def test_maximizer_summary_and_dump(tmp_path, capsys):
    out_path = tmp_path / "dump.csv"
    code, out, _ = run(capsys, "maximizer", "--p", "4", "--out", str(out_path))
    assert code == 0
    fields = out.strip().split(",")
    assert fields[:4] == ["4", "10", "15", "0.666666666667"]
    assert int(fields[4]) > 0  # pruning removed candidates
    assert fields[5] == "5;10"
    lines = out_path.read_text().splitlines()
    assert lines[0] == "x,binary_word,S"
    assert lines[1] == "0,0000,0"
    assert lines[6] == "5,0101,10"


def test_maximizer_no_prune(capsys):
    code, out, _ = run(capsys, "maximizer", "--p", "4", "--no-prune")
    assert code == 0
    fields = out.strip().split(",")
    assert fields[1] == "10" and fields[4] == "0"


def test_ising_table(tmp_path, capsys):
    out_path = tmp_path / "spin.csv"
    code, _, _ = run(capsys, "ising", "--p", "2", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "x,F_num,F_den,Q_num,Q_den,energy"
    # x=0: F=0, Q=+2/2, energy -Q = -1;  x=1: F=1/2, Q=-2/2, energy 1
    assert lines[1] == "0,0,2,2,2,-1"
    assert lines[2] == "1,1,2,-2,2,1"


# -- verify -----------------------------------------------------------------------------


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--p-min", "2", "--p-max", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert all(line.startswith("PASS") for line in lines)


def test_verify_empty_range(capsys):
    code, _, err = run(capsys, "verify", "--p-min", "5", "--p-max", "4")
    assert code == 2 and "range" in err


def test_verify_detects_injected_rounding_fault(capsys, monkeypatch):
    # an off-by-one rounding (truncation instead of nearest) must surface
    # as a construction-equivalence failure and exit code 3
    monkeypatch.setattr(patterns, "round_half_up", lambda num, den: num // den)
    code, out, err = run(capsys, "verify", "--p-min", "2", "--p-max", "3")
    assert code == 3
    assert "FAIL construction-equivalence" in out
    assert "construction-equivalence" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys)[0] == 2  # a command is required
