"""
Tests for the command-line entry point.
"""
import json

import pytest

from main import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, main
from src.summation import sum_f_naive
from src.utils.output import load_report


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("KEMPNER_WORKERS", "1")


def _csv_rows(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


class TestCmdF:
    """Test cases for the f subcommand."""

    def test_fast_path_value(self, capsys):
        """Test f 10: f = P = 5 through the fast path."""
        assert main(["f", "10"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert rows == [{"n": "10", "f": "5", "P": "5", "factorization": "2*5",
                         "fast_path": "true"}]

    def test_slow_path_values(self, capsys):
        """Test f 1 and f 1024."""
        assert main(["f", "1", "1024"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert rows[0] == {"n": "1", "f": "1", "P": "1", "factorization": "1",
                           "fast_path": "false"}
        assert rows[1] == {"n": "1024", "f": "12", "P": "2", "factorization": "2^10",
                           "fast_path": "false"}

    def test_json(self, capsys):
        """Test the JSON record format."""
        assert main(["f", "2^5", "--format", "json"]) == EXIT_OK
        records = json.loads(capsys.readouterr().out)["records"]
        assert records == [{"n": 32, "f": 8, "P": 2, "factorization": "2^5",
                            "fast_path": False}]

    def test_invalid_n(self):
        """Test malformed and non-positive n."""
        assert main(["f", "abc"]) == EXIT_USAGE
        assert main(["f", "0"]) == EXIT_USAGE

    def test_beyond_prime_budget(self):
        """Test that n too large to factor is refused as a resource limit."""
        assert main(["f", "10^18"]) == EXIT_CAPACITY


class TestCmdSum:
    """Test cases for the sum subcommand."""

    def test_sum_to_10(self, capsys):
        """Test sum --xmax 10: one row with the hand-checked sums."""
        assert main(["sum", "--xmax", "10"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert len(rows) == 1
        assert rows[0]["sum_f"] == "40"
        assert rows[0]["sum_P"] == "33"
        assert rows[0]["sum_f_kfree_2"] == "26"
        assert rows[0]["count_kfree_2"] == "7"

    def test_rows_match_oracle(self, capsys):
        """Test three checkpoint rows equal to the naive sums."""
        assert main(["sum", "--xmax", "1000", "--grid", "10,100,1000",
                     "--block-size", "100"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert [row["x"] for row in rows] == ["10", "100", "1000"]
        for row in rows:
            expected = sum_f_naive(int(row["x"]))
            assert int(row["sum_f"]) == expected.sum_f
            assert int(row["sum_f_hard"]) == expected.sum_f_hard
            assert int(row["sum_f_kfree_3"]) == expected.sum_f_kfree[3]

    def test_summary_on_stderr(self, capsys):
        """Test that stdout holds only header and checkpoint rows, the summary going to stderr."""
        assert main(["sum", "--xmax", "100", "--grid", "10,100"]) == EXIT_OK
        captured = capsys.readouterr()
        lines = captured.out.strip().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("x,sum_f,sum_P,sum_f_hard,")
        assert [line.split(",")[0] for line in lines[1:]] == ["10", "100"]
        assert "Summation Summary" in captured.err

    def test_grid_gets_xmax(self, capsys):
        """Test that x_max is appended to a shorter grid."""
        assert main(["sum", "--xmax", "200", "--grid", "10,100"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert [row["x"] for row in rows] == ["10", "100", "200"]

    def test_grid_file_and_output(self, tmp_path):
        """Test --grid-file with --output and JSON format."""
        grid = tmp_path / "grid.txt"
        grid.write_text("# checkpoints\n10\n100\n")
        out = tmp_path / "run.json"
        assert main(["sum", "--xmax", "100", "--grid-file", str(grid), "--k", "2",
                     "--moments", "2,3", "--format", "json", "-o", str(out)]) == EXIT_OK
        report, tables = load_report(out.read_text())
        assert [cp.x for cp in report.checkpoints] == [10, 100]
        assert report.checkpoint_at(10).sum_f_pow[3] == 1000
        assert report.ks == [2]
        assert tables == {}

    def test_workers_from_environment(self, monkeypatch, capsys):
        """Test KEMPNER_WORKERS and a bad value for it."""
        monkeypatch.setenv("KEMPNER_WORKERS", "2")
        assert main(["sum", "--xmax", "10"]) == EXIT_OK
        assert _csv_rows(capsys.readouterr().out)[0]["sum_f"] == "40"
        monkeypatch.setenv("KEMPNER_WORKERS", "many")
        assert main(["sum", "--xmax", "10"]) == EXIT_USAGE

    @pytest.mark.parametrize("argv", [
        ["sum", "--xmax", "0"],
        ["sum"],
        ["sum", "--xmax", "100", "--grid", "10,1000"],
        ["sum", "--xmax", "100", "--k", "1"],
        ["sum", "--xmax", "100", "--moments", "5"],
        ["sum", "--xmax", "100", "--workers", "0"],
        ["sum", "--xmax", "100", "--unknown"],
    ])
    def test_invalid_config(self, argv):
        """Test that invalid configurations are usage errors."""
        assert main(argv) == EXIT_USAGE

    def test_capacity_refusal(self):
        """Test x_max beyond the supported range."""
        assert main(["sum", "--xmax", "10^11"]) == EXIT_CAPACITY


class TestCmdVerify:
    """Test cases for the verify subcommand."""

    def test_eq12(self, capsys):
        """Test verify eq12 within its tail bound."""
        assert main(["verify", "eq12", "--k", "2", "--n", "10^5"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert len(rows) == 1
        assert float(rows[0]["diff"]) <= float(rows[0]["tail_bound"])

    def test_theorem4_requires_k(self):
        """Test verify theorem4 without --k."""
        assert main(["verify", "theorem4", "--xmax", "1000"]) == EXIT_USAGE

    def test_unknown_target(self):
        """Test that unknown targets are rejected by the parser."""
        assert main(["verify", "theorem9"]) == EXIT_USAGE

    def test_theorem3_rows(self, capsys):
        """Test two candidate rows per checkpoint and a verdict column."""
        assert main(["verify", "theorem3", "--xmax", "10^4",
                     "--grid", "10,100,1000,10000"]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert len(rows) == 8
        assert {row["candidate"] for row in rows} == {"zeta(2)", "zeta(2)/2"}
        assert {row["verdict"] for row in rows} == {"zeta(2)/2"}

    def test_verify_from_stored_report(self, tmp_path, capsys):
        """Test verify --report on a run written by sum --format json."""
        out = tmp_path / "run.json"
        assert main(["sum", "--xmax", "1000", "--grid", "10,100,1000",
                     "--format", "json", "-o", str(out)]) == EXIT_OK
        capsys.readouterr()
        assert main(["verify", "eq5", "--report", str(out)]) == EXIT_OK
        rows = _csv_rows(capsys.readouterr().out)
        assert [row["x"] for row in rows] == ["10", "100", "1000"]
        assert rows[0]["sum_f_hard"] == "15"

    def test_json_document(self, capsys):
        """Test the single JSON object of a verify run."""
        assert main(["verify", "eq2", "--k", "2", "--xmax", "1000",
                     "--grid", "10,1000", "--format", "json"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert set(document) == {"config", "checkpoints", "tables", "run"}
        assert document["tables"]["eq2"]["rows"][0]["count"] == 7

    def test_missing_report_file(self, tmp_path):
        """Test a --report path that does not exist."""
        assert main(["verify", "eq5", "--report", str(tmp_path / "none.json")]) == EXIT_USAGE
