import csv
import json
from pathlib import Path

import pytest

from semitsp import gen_random, instance_to_json
from semitsp.cli import CSV_COLUMNS, main

DATA = Path(__file__).parent / "data"
EXAMPLE1 = str(DATA / "example1.json")


class TestAnalyze:
    def test_example1_text(self, capsys):
        assert main(["analyze", EXAMPLE1]) == 0
        out = capsys.readouterr().out
        assert "beta=4 gamma=5" in out
        assert "beta_witness=(0, 1, 4)" in out
        assert "classification=beta_metric(beta=4)" in out
        assert "satisfied=True" in out

    def test_example1_json(self, capsys):
        assert main(["analyze", EXAMPLE1, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["beta"] == 4.0
        assert doc["gamma"] == 5.0
        assert doc["gamma_witness"] == [0, 4]
        assert doc["suzuki_ok"] is True
        assert doc["bounds"]["3g2"] == 7.5

    def test_asymmetric_instance_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"n": 2, "matrix": [[0, 1], [2, 0]]}')
        assert main(["analyze", str(bad)]) == 2
        assert "AsymmetricWeight" in capsys.readouterr().err


class TestSolve:
    def test_exact_example1(self, capsys):
        assert main(["solve", EXAMPLE1, "--method", "exact"]) == 0
        out = capsys.readouterr().out
        assert "tour_weight=11.0" in out
        assert "method=exact" in out

    @pytest.mark.parametrize("method", ["mst2", "christofides"])
    def test_verified_solve(self, method, capsys):
        assert main(["solve", EXAMPLE1, "--method", method, "--verify"]) == 0
        assert "verified=True" in capsys.readouterr().out

    def test_solve_json(self, capsys):
        assert main(["solve", EXAMPLE1, "--method", "christofides", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["gamma"] == 5.0
        assert doc["guarantee_factor"] == 7.5
        assert sorted(doc["tour"]) == [0, 1, 2, 3, 4]

    def test_solve_with_root(self, capsys):
        assert main(["solve", EXAMPLE1, "--method", "mst2", "--root", "2",
                     "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["tour"][0] == 2

    def test_verify_above_cap_exits_3(self, tmp_path, capsys):
        f = tmp_path / "big.json"
        f.write_text(instance_to_json(gen_random(9, 0, 1, 10)))
        rc = main(["solve", str(f), "--verify", "--oracle-cap", "8"])
        assert rc == 3

    def test_bad_file_exits_2(self, tmp_path):
        f = tmp_path / "junk.json"
        f.write_text("{broken")
        assert main(["solve", str(f)]) == 2

    def test_missing_file_exits_2(self):
        assert main(["solve", "/nonexistent/x.json"]) == 2


class TestGenAndComplete:
    def test_gen_star_then_analyze(self, tmp_path, capsys):
        out = tmp_path / "star.json"
        assert main(["gen", "star", "--n", "6", "--gamma", "2", "-o",
                     str(out)]) == 0
        assert main(["analyze", str(out)]) == 0
        assert "gamma=2" in capsys.readouterr().out

    def test_gen_random_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            assert main(["gen", "random", "--n", "6", "--seed", "3", "-o",
                         str(path)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_complete_edge_list(self, tmp_path, capsys):
        src = tmp_path / "path.json"
        src.write_text('{"n": 3, "edges": [[0,1,1.0],[1,2,2.0]]}')
        out = tmp_path / "completed.json"
        assert main(["complete", str(src), "-o", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["matrix"][0][2] == 3.0
        assert "filler_weight=3.0" in capsys.readouterr().err

    def test_complete_already_complete(self, tmp_path):
        src = tmp_path / "k3.json"
        src.write_text('{"n": 3, "matrix": [[0,1,2],[1,0,3],[2,3,0]]}')
        out = tmp_path / "same.json"
        assert main(["complete", str(src), "-o", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["matrix"] == [[0, 1, 2], [1, 0, 3], [2, 3, 0]]


class TestBench:
    def test_csv_schema_and_determinism(self, tmp_path):
        out1, out2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
        argv = ["bench", "--sizes", "5,6", "--seeds", "0,1", "-o"]
        assert main(argv + [str(out1)]) == 0
        assert main(argv + [str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        with open(out1) as fh:
            rows = list(csv.DictReader(fh))
        assert list(rows[0].keys()) == CSV_COLUMNS
        # 2 sizes x 2 seeds x 2 methods
        assert len(rows) == 8
        for row in rows:
            assert row["method"] in ("mst2", "christofides")
            assert row["optimum"] != ""  # n <= default exact cap
            assert float(row["ratio"]) >= 1.0 - 1e-9
            tw = float(row["tour_weight"])
            opt = float(row["optimum"])
            factor = 2.0 if row["method"] == "mst2" else 1.5
            assert tw <= factor * float(row["gamma"]) * opt * (1 + 1e-9)

    def test_rows_sorted(self, tmp_path):
        out = tmp_path / "r.csv"
        assert main(["bench", "--sizes", "6,5", "--seeds", "1,0", "-o",
                     str(out)]) == 0
        with open(out) as fh:
            rows = list(csv.DictReader(fh))
        keys = [(int(r["n"]), int(r["seed"]), r["method"]) for r in rows]
        assert keys == sorted(keys)


class TestUsage:
    def test_unknown_command_exits_1(self):
        assert main(["frobnicate"]) == 1

    def test_no_command_exits_1(self):
        assert main([]) == 1

    def test_bad_method_exits_1(self):
        assert main(["solve", EXAMPLE1, "--method", "magic"]) == 1
