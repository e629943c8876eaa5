import csv
import json
import subprocess
import sys

from mpmath import mp, mpf

from oscq.mpfun import workprec


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "oscq.cli", *args],
                          capture_output=True, text=True)


def test_zeros_command(tmp_path):
    out = tmp_path / "z.csv"
    r = run_cli("zeros", "--nu", "0", "--n", "4", "--out", str(out))
    assert r.returncode == 0, r.stderr
    rows = list(csv.DictReader(out.open(newline="")))
    assert len(rows) == 4
    assert list(rows[0]) == ["index", "re", "im", "re_w", "im_w", "residual"]
    with workprec(128):
        for row in rows:
            assert abs(mpf(row["re"])) <= mpf(10) ** -20
            # frame consistency: re = -n pi im_w
            assert abs(mpf(row["re"]) + 4 * mp.pi * mpf(row["im_w"])) \
                <= mpf(10) ** -20
    man = json.loads((tmp_path / "z.csv.manifest.json").read_text())
    assert man["command"] == "zeros"
    assert man["n"] == 4
    assert man["precision_bits_used"] >= 256
    assert "zero_line" in man["residual_summaries"]
    assert man["chi_profile"] == "smoothstep-exp"


def test_zeros_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli("zeros", "--nu", "0.25", "--n", "5",
                   "--out", str(a)).returncode == 0
    assert run_cli("zeros", "--nu", "0.25", "--n", "5",
                   "--out", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_zeros_desk_ceiling(tmp_path):
    r = run_cli("zeros", "--nu", "0.25", "--n", "100",
                "--out", str(tmp_path / "x.csv"))
    assert r.returncode == 2
    assert "allow-long" in r.stderr


def test_verify_command(tmp_path):
    out = tmp_path / "report.json"
    r = run_cli("verify", "--suite", "quadrature", "--n-list", "1..3",
                "--prec", "192", "--out", str(out))
    assert r.returncode == 0, r.stderr
    report = json.loads(out.read_text())
    assert report["suite"] == "quadrature"
    assert report["passed"] is True
    assert all(set(c) == {"name", "measured", "threshold", "passed"}
               for c in report["checks"])


def test_verify_bad_suite():
    r = run_cli("verify", "--suite", "nonsense")
    assert r.returncode == 2


def test_asymptotics_outer(tmp_path):
    out = tmp_path / "outer.csv"
    r = run_cli("asymptotics", "--nu", "0.25", "--n", "8",
                "--regime", "outer", "--out", str(out))
    assert r.returncode == 0, r.stderr
    rows = list(csv.DictReader(out.open(newline="")))
    assert len(rows) == 5
    with workprec(96):
        for row in rows:
            assert mpf(row["rel_err"]) <= mpf(row["error_scale"]) * 3


def test_asymptotics_domain_guard(tmp_path):
    pts = tmp_path / "pts.csv"
    pts.write_text("z_re,z_im\r\n0.5,0.0\r\n")
    r = run_cli("asymptotics", "--nu", "0.25", "--n", "8",
                "--regime", "outer", "--points", str(pts),
                "--out", str(tmp_path / "bad.csv"))
    assert r.returncode == 4


def test_asymptotics_inner_points_file(tmp_path):
    pts = tmp_path / "pts.csv"
    pts.write_text("z_re,z_im\r\n0.5,0.0\r\n-0.5,0.0\r\n")
    out = tmp_path / "inner.csv"
    r = run_cli("asymptotics", "--nu", "0.25", "--n", "16",
                "--regime", "inner", "--points", str(pts),
                "--out", str(out))
    assert r.returncode == 0, r.stderr
    rows = list(csv.DictReader(out.open(newline="")))
    assert len(rows) == 2
    with workprec(96):
        for row in rows:
            assert mpf(row["rel_err"]) <= mpf(row["error_scale"]) * 3
