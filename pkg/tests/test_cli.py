import csv
import io
import json
import math
import subprocess
import sys

import pytest

from ellip2 import cli, complete_E


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def field(text, name):
    for line in text.splitlines():
        if line.startswith(name):
            return line.split("=", 1)[1].strip()
    raise KeyError(name)


class TestEval:
    def test_origin(self):
        code, out = run("eval", "--k1", "0", "--k2", "0", "--method", "f4")
        assert code == 0
        assert field(out, "value") == "2.4674011002723395"

    def test_factorised_quad(self):
        code, out = run("eval", "--k1", "0.6", "--k2", "0", "--method", "quad")
        assert code == 0
        assert float(field(out, "value")) == pytest.approx(0.5 * math.pi * complete_E(0.6), rel=1e-12)
        assert field(out, "method") == "quadrature"

    def test_symmetric_bound(self, capsys):
        code, _ = run("eval", "--k1", "0.71", "--k2", "0.71", "--method", "f4")
        assert code == 2
        assert "1/sqrt(2)" in capsys.readouterr().err

    def test_k_equal_flag(self):
        code, out = run("eval", "--k1", "0.5", "--k-equal", "--method", "f4")
        assert code == 0
        _, ref = run("eval", "--k1", "0.5", "--k2", "0.5", "--method", "quad")
        assert float(field(out, "value")) == pytest.approx(float(field(ref, "value")), rel=1e-10)

    def test_outside_domain(self, capsys):
        code, _ = run("eval", "--k1", "0.8", "--k2", "0.7")
        assert code == 2
        assert "k1^2 + k2^2" in capsys.readouterr().err

    def test_non_convergence(self, capsys):
        code, _ = run("eval", "--k1", "0.9", "--k2", "0.3", "--method", "series", "--max-terms", "3")
        assert code == 3

    def test_auto_records_path(self):
        _, out = run("eval", "--k1", "0", "--k2", "0.5", "--method", "auto")
        assert field(out, "method") == "legendre_series"

    def test_product_for_K(self):
        code, out = run("eval", "--k1", "0.5", "--k2", "0.5", "--kind", "K", "--method", "product")
        assert code == 0 and field(out, "method") == "product_formula"
        code, _ = run("eval", "--k1", "0.5", "--k2", "0.5", "--method", "product")
        assert code == 2


class TestVerify:
    def test_passing_grid(self):
        code, out = run("verify", "--k1-range", "0", "0.6", "10", "--k2-range", "0", "0.6", "10")
        assert code == 0
        assert "all methods covered  = 100" in out
        assert "PASS" in out

    def test_reports_worst(self):
        _, out = run("verify", "--k1-range", "0.1", "0.9", "5", "--k2-range", "0.1", "0.5", "3")
        assert "worst point" in out and "max pairwise rel dev" in out

    def test_corner_point_is_covered(self):
        # (0.8, 0.5) lies inside the series domain (t ~ 0.74)
        code, out = run("verify", "--k1-range", "0.8", "0.8", "1", "--k2-range", "0.5", "0.5", "1",
                        "--methods", "quad,series")
        assert code == 0
        assert "skip" not in out

    def test_inadmissible_points_are_skipped_with_reason(self):
        code, out = run("verify", "--k1-range", "0.5", "0.9", "3", "--k2-range", "0.5", "0.9", "3")
        assert code == 0
        assert "skip  k1=0.90000000000000002 k2=0.90000000000000002 point: k1^2 + k2^2 >= 1" in out

    def test_empty_grid(self):
        code, _ = run("verify", "--k1-range", "0.8", "0.9", "2", "--k2-range", "0.8", "0.9", "2")
        assert code == 2

    def test_tolerance_exceeded(self):
        code, out = run("verify", "--k1-range", "0.3", "0.6", "3", "--k2-range", "0.3", "0.6", "3",
                        "--tol", "1e-30")
        assert code == 1 and "FAIL" in out

    def test_bad_range(self):
        code, _ = run("verify", "--k1-range", "0.5", "0.2", "3")
        assert code == 2

    def test_symmetric_sweep(self):
        code, out = run("verify", "--k1-range", "0.1", "0.7", "7", "--k-equal")
        assert code == 0

    def test_K_sweep(self):
        code, _ = run("verify", "--kind", "K", "--methods", "quad,product",
                      "--k1-range", "0", "0.9", "4", "--k2-range", "0", "0.9", "4")
        assert code == 0


def export(*extra):
    return run("export", "--k1-range", "0.2", "0.8", "3", "--k2-range", "0.3", "0.7", "3", *extra)


class TestExport:
    def test_row_count_and_header(self):
        code, out = export()
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k1,k2,method,value,error_estimate,work,status"
        assert len(lines) == 10

    def test_json_matches_csv(self):
        _, c = export("--format", "csv")
        _, j = export("--format", "json")
        rows = list(csv.DictReader(io.StringIO(c)))
        objs = json.loads(j)
        assert len(rows) == len(objs) == 9
        for r, o in zip(rows, objs):
            for name in ("k1", "k2", "value", "error_estimate"):
                if o[name] is None:
                    assert r[name] == ""
                else:
                    assert format(o[name], ".17g") == r[name]
                    assert float(r[name]) == o[name]
            assert r["status"] == o["status"] and r["method"] == o["method"]

    def test_domain_skip_rows(self):
        _, out = export("--format", "json")
        objs = json.loads(out)
        skipped = [o for o in objs if o["status"] == "domain_skip"]
        assert skipped and all(o["value"] is None for o in skipped)
        assert all(o["k1"] ** 2 + o["k2"] ** 2 >= 1 for o in skipped)
        assert all(o["status"] == "ok" for o in objs if o["k1"] ** 2 + o["k2"] ** 2 < 1)

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert export("--out", str(a))[0] == 0
        assert export("--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert a.read_text() == export()[1]

    def test_unwritable_destination(self, tmp_path, capsys):
        code, _ = export("--out", str(tmp_path / "missing" / "x.csv"))
        assert code == 1
        assert not (tmp_path / "missing").exists()

    def test_atomic_on_failure(self, tmp_path, monkeypatch):
        target = tmp_path / "out.csv"
        target.write_text("previous\n")

        def boom(*_):
            raise OSError("disk full")

        monkeypatch.setattr(cli.os, "replace", boom)
        code, _ = export("--out", str(target))
        assert code == 1
        assert target.read_text() == "previous\n"
        assert [p.name for p in tmp_path.iterdir()] == ["out.csv"]

    def test_auto_method_column(self):
        _, out = export()
        methods = {r["method"] for r in csv.DictReader(io.StringIO(out)) if r["status"] == "ok"}
        assert methods == {"f4_closed"}


@pytest.mark.parametrize("argv,code", [
    (["eval", "--k1", "0.3", "--k2", "0.4"], 0),
    (["eval", "--k1", "0.71", "--k2", "0.71", "--method", "f4"], 2),
    (["eval", "--k1", "0.9", "--k2", "0.3", "--method", "series", "--max-terms", "3"], 3),
    (["verify", "--k1-range", "0.3", "0.6", "2", "--tol", "1e-30"], 1),
])
def test_exit_codes_from_process(argv, code):
    proc = subprocess.run([sys.executable, "-m", "ellip2", *argv], capture_output=True, text=True)
    assert proc.returncode == code
