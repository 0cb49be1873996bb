import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from seysen.cli import main
from seysen.lattice import Basis
from seysen.matrixio import parse_matrix, serialize_matrix
from seysen.reduction import unimodular_scramble


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="b.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


class TestMetrics:
    def test_identity_json(self, write):
        code, text = run("metrics", write("[[1 0]\n[0 1]]"), "--format", "json")
        assert code == 0
        rep = json.loads(text)
        assert rep["seysen_dual"] == "2" and rep["od"] == "0"

    def test_worked_json(self, write):
        code, text = run("metrics", write("[[1 0]\n[1 1]]"), "--format", "json")
        rep = json.loads(text)
        for key in ("seysen_dual", "seysen_trace", "seysen_cofactor", "seysen_angles"):
            assert rep[key] == "4"
        assert rep["seysen_eigen"] == pytest.approx(4, rel=1e-9)
        assert rep["od"] == "1/2" and rep["kappa_sq"] == "8"

    def test_json_is_byte_identical(self, write):
        path = write("[[3 1 4]\n[1 5 9]\n[2 6 5]]")
        assert run("metrics", path, "--format", "json") == run("metrics", path, "--format", "json")

    def test_csv_and_text(self, write):
        path = write("[[1 0]\n[1 1]]")
        code, text = run("metrics", path, "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert code == 0 and rows[0]["seysen_dual"] == "4"
        code, text = run("metrics", path)
        assert code == 0 and "seysen_dual" in text

    def test_float_mode(self, write):
        code, text = run("metrics", write("[[1 0]\n[1 1]]"), "--mode", "float", "--format", "json")
        assert code == 0
        assert float(json.loads(text)["seysen_dual"]) == pytest.approx(4)

    def test_rank_deficient(self, write, capsys):
        code, _ = run("metrics", write("[[1 0][2 0]]"))
        assert code == 3
        assert "certificate" in capsys.readouterr().err

    def test_parse_error(self, write, capsys):
        code, _ = run("metrics", write("[[1 0]\n[1 x]]"))
        assert code == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert run("metrics", str(tmp_path / "absent.txt"))[0] == 2


class TestVerify:
    def test_worked(self, write):
        code, text = run("verify", write("[[1 0]\n[1 1]]"), "--format", "json")
        assert code == 0
        verdicts = {v["name"]: v for v in json.loads(text)["verdicts"]}
        assert verdicts["route_equality"]["satisfied"]
        assert verdicts["zhang_upper"]["margin"] == 0
        assert all(v["satisfied"] for v in verdicts.values())

    def test_identity_equalities(self, write):
        rows = "\n".join("[" + " ".join("1" if i == j else "0" for j in range(5)) + "]" for i in range(5))
        code, text = run("verify", write("[" + rows + "]"), "--format", "csv")
        assert code == 0
        verdicts = {r["name"]: r for r in csv.DictReader(io.StringIO(text))}
        for name in ("zhang_lower", "zhang_product", "amgm_product"):
            assert verdicts[name]["lhs"] == verdicts[name]["rhs"]
        # the identity is LLL reduced, so the LLL minimum check is appended
        assert verdicts["lll_min"]["satisfied"] == "true"

    @pytest.mark.parametrize("seed", range(3))
    def test_generated(self, write, seed):
        _, text = run("gen", "--n", "5", "--bound", "30", "--seed", str(seed))
        assert run("verify", write(text))[0] == 0

    def test_bad_delta_is_usage_error(self, write):
        with pytest.raises(SystemExit) as exc:
            run("verify", write("[[1]]"), "--delta", "0.2")
        assert exc.value.code == 2


class TestReduce:
    def test_hand_example_json(self, write):
        code, text = run("reduce", write("[[1 0]\n[10 1]]"), "--format", "json")
        rec = json.loads(text)
        assert code == 0
        assert (rec["S_before"], rec["S_after"]) == ("202", "2")
        assert rec["abs_det_U"] == "1"
        assert parse_matrix(rec["basis"]) == Basis.from_rows([[1, 0], [0, 1]])

    @pytest.mark.parametrize("algo", ["seysen", "lll"])
    def test_identity_unchanged(self, write, algo):
        code, text = run("reduce", write("[[1 0 0]\n[0 1 0]\n[0 0 1]]"), "--algo", algo, "--format", "json")
        rec = json.loads(text)
        assert rec["S_before"] == rec["S_after"] == "3"
        assert rec["steps"] in (0, None)
        assert parse_matrix(rec["basis"]) == Basis.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_scrambled_identity(self, write, tmp_path):
        b = unimodular_scramble(Basis.from_rows([[int(i == j) for j in range(6)] for i in range(6)]), 0, 30)
        out_path = tmp_path / "red.txt"
        code, text = run("reduce", write(serialize_matrix(b)), "-o", str(out_path), "--format", "json")
        assert code == 0
        assert json.loads(text)["S_after"] == "6"
        red = parse_matrix(out_path.read_text())
        assert red.volume_sq == 1

    def test_text_mode_splits_streams(self, write, capsys):
        code, text = run("reduce", write("[[1 0]\n[10 1]]"))
        assert code == 0
        assert parse_matrix(text) == Basis.from_rows([[1, 0], [0, 1]])
        assert "S_before" in capsys.readouterr().err


class TestGen:
    def test_deterministic(self):
        a = run("gen", "--n", "3", "--m", "3", "--bound", "10", "--seed", "42")
        assert a == run("gen", "--n", "3", "--m", "3", "--bound", "10", "--seed", "42")
        assert parse_matrix(a[1]).n == 3

    def test_knapsack(self):
        code, text = run("gen", "--family", "knapsack", "--n", "4", "--bound", "1000", "--seed", "1")
        b = parse_matrix(text)
        assert (b.n, b.m) == (4, 5)
        assert b.volume_sq == 1 + sum(r[-1] ** 2 for r in b.rows)


def bench(*extra):
    code, text = run("bench", *extra)
    rows = list(csv.DictReader(io.StringIO(text)))
    return code, text, [r for r in rows if r["trial"].isdigit()]


class TestBench:
    def test_byte_identical(self):
        a = bench("--n", "4", "--trials", "1", "--seed", "7")
        assert a == bench("--n", "4", "--trials", "1", "--seed", "7")
        assert a[0] == 0

    def test_jobs_do_not_change_output(self):
        assert bench("--n", "3", "--trials", "4", "--jobs", "2")[1] == bench("--n", "3", "--trials", "4")[1]

    def test_n2_upper_margin_zero(self):
        code, _, rows = bench("--n", "2", "--trials", "20")
        assert code == 0 and len(rows) == 20
        assert all(Fraction(r["zhang_upper_margin"]) == 0 for r in rows)

    def test_n8_new_product_tighter(self):
        code, _, rows = bench("--n", "8", "--trials", "10", "--seed", "3")
        skewed = [r for r in rows if Fraction(r["S_initial"]) >= 16]
        assert skewed
        assert all(float(r["new_product_rhs"]) < float(r["zhang_product_rhs"]) for r in skewed)

    def test_aggregate_rows_and_timings(self):
        _, text = run("bench", "--n", "3", "--trials", "3", "--timings")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert [r["trial"] for r in rows][-2:] == ["mean", "median"]
        assert "t_seysen" in rows[0]
        _, text = run("bench", "--n", "3", "--trials", "3")
        assert "t_seysen" not in text


def test_module_entry_point(tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("[[1 0]\n[1 1]]")
    proc = subprocess.run([sys.executable, "-m", "seysen", "metrics", str(path), "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["seysen_dual"] == "4"
