import csv
import json

import pytest

from qisbench.cli import main
from qisbench.graphs import dump_dimacs, gen_random


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestReportCommands:
    def test_maximal_is(self, capsys):
        payload = run_json(capsys, "maximal-is", "--gen", "path:3")
        assert payload["result"] == [1, 3]
        assert payload["matrix_queries"] == 4
        assert payload["command"] == "maximal-is"

    def test_maximal_is_list_model(self, capsys):
        payload = run_json(
            capsys, "maximal-is", "--gen", "path:3", "--model", "list"
        )
        assert payload["result"] == [1, 3]
        assert payload["degree_queries"] == 2 and payload["matrix_queries"] == 0

    def test_maximum_is(self, capsys):
        payload = run_json(capsys, "maximum-is", "--gen", "petersen")
        assert payload["result_size"] == 4
        assert payload["trials"] == 4

    def test_k_is(self, capsys):
        payload = run_json(capsys, "k-is", "--gen", "cycle:5", "-k", "2")
        assert payload["result"] == [1, 3]
        assert payload["params"]["cost_exponent"] == "1"
        payload = run_json(capsys, "k-is", "--gen", "cycle:5", "-k", "3")
        assert payload["result"] is None

    def test_oct(self, capsys):
        payload = run_json(capsys, "oct", "--gen", "cycle:5")
        assert payload["result_size"] == 1

    def test_color(self, capsys):
        payload = run_json(capsys, "color", "--gen", "complete:3")
        assert payload["result_size"] == 3

    def test_dimacs_input(self, capsys, tmp_path):
        g = gen_random(8, 0.5, 4)
        path = tmp_path / "g.col"
        path.write_text(dump_dimacs(g))
        payload = run_json(capsys, "maximal-is", "--input", str(path))
        assert payload["n"] == 8 and payload["source"] == "dimacs"


class TestOtherCommands:
    def test_adversary(self, capsys):
        payload = run_json(capsys, "adversary", "-n", "2")
        assert payload["m"] == 2 and payload["m_prime"] == 6
        assert payload["passed"] is True

    def test_bench(self, capsys):
        payload = run_json(
            capsys, "bench", "maximal-is", "--sizes", "8,16,32", "--reps", "3"
        )
        assert len(payload["reports"]) == 9
        assert payload["fit"] is not None

    def test_verify_single_scope(self, capsys):
        payload = run_json(capsys, "verify", "--scope", "gadgets", "--nmax", "2")
        assert payload["passed"] is True
        assert [r["scope"] for r in payload["results"]] == ["gadgets"]


class TestOutputFiles:
    def test_csv_out(self, capsys, tmp_path):
        out = tmp_path / "report.csv"
        code, stdout, _ = run(
            capsys, "maximal-is", "--gen", "path:3", "--out", str(out)
        )
        assert code == 0 and stdout == ""
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 1 and rows[0]["result"] == "1 3"

    def test_csv_out_bench(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code, _, _ = run(
            capsys,
            "bench",
            "maximal-is",
            "--sizes",
            "8,16,32",
            "--reps",
            "2",
            "--out",
            str(out),
        )
        assert code == 0
        assert len(list(csv.DictReader(out.open()))) == 6

    def test_out_plus_json_prints_both(self, capsys, tmp_path):
        out = tmp_path / "report.csv"
        code, stdout, _ = run(
            capsys, "oct", "--gen", "cycle:5", "--out", str(out), "--json"
        )
        assert code == 0 and out.exists()
        assert json.loads(stdout)["result_size"] == 1


class TestReproducibility:
    def test_identical_modulo_wall_time(self, capsys):
        a = run_json(capsys, "maximal-is", "--gen", "random:16:0.5:9", "--seed", "5")
        b = run_json(capsys, "maximal-is", "--gen", "random:16:0.5:9", "--seed", "5")
        a.pop("wall_time_s")
        b.pop("wall_time_s")
        assert a == b


class TestExitCodes:
    def test_bad_gen_spec(self, capsys):
        code, _, err = run(capsys, "maximal-is", "--gen", "nonsense:4")
        assert code == 2 and "generator spec" in err

    def test_bad_dimacs(self, capsys, tmp_path):
        path = tmp_path / "bad.col"
        path.write_text("p edge 3 1\ne 1 9")
        code, _, err = run(capsys, "maximal-is", "--input", str(path))
        assert code == 2 and "out of range" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "maximal-is", "--input", "/no/such/file")
        assert code == 2

    def test_bad_k(self, capsys):
        code, _, _ = run(capsys, "k-is", "--gen", "path:3", "-k", "9")
        assert code == 2

    def test_budget_exceeded(self, capsys):
        code, _, err = run(capsys, "oct", "--gen", "random:30:0.5")
        assert code == 1 and "limited" in err

    def test_missing_source_rejected_by_argparse(self):
        with pytest.raises(SystemExit) as exc:
            main(["maximal-is"])
        assert exc.value.code == 2
