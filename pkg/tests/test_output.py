"""
Tests for CSV and JSON output.
"""
import io
import json

from src.analysis import theorem3_table
from src.models.config import VerifyOptions
from src.utils.output import (
    CheckpointCsvWriter,
    dump_json,
    format_cell,
    load_report,
    report_document,
    write_table_csv,
)
from src.verifiers import VerifierFactory


class TestFormatCell:
    """Test cases for format_cell."""

    def test_integers_in_full(self):
        """Test that big integers never use scientific notation."""
        assert format_cell(10 ** 30) == "1" + "0" * 30
        assert format_cell(0) == "0"

    def test_reals_and_flags(self):
        """Test 12 significant digits and boolean spelling."""
        assert format_cell(1 / 3) == "0.333333333333"
        assert format_cell(1.5) == "1.5"
        assert format_cell(True) == "true"
        assert format_cell(False) == "false"
        assert format_cell("zeta(2)") == "zeta(2)"


class TestCheckpointCsv:
    """Test cases for the streaming checkpoint writer."""

    def test_rows(self, small_report):
        """Test the header and the x = 10 row."""
        out = io.StringIO()
        writer = CheckpointCsvWriter(out, small_report.ks, small_report.moment_orders)
        writer.write_header()
        for cp in small_report.checkpoints:
            writer.write(cp)
        lines = out.getvalue().splitlines()
        assert lines[0] == ("x,sum_f,sum_P,sum_f_hard,count_kfree_2,count_kfree_3,"
                            "sum_f_kfree_2,sum_f_kfree_3,sum_f_pow_2,sum_f_pow_3")
        assert lines[1] == "10,40,33,15,7,9,26,36,190,1000"
        assert len(lines) == 4
        assert writer.rows_written == 3


class TestJsonRoundTrip:
    """Test cases for report_document and load_report."""

    def test_report_round_trip(self, small_report):
        """Test that a stored run reproduces its tables exactly."""
        table = VerifierFactory.create_verifier(VerifyOptions(target="eq5")).verify(small_report)
        out = io.StringIO()
        dump_json(report_document(small_report, [table]), out)

        document = json.loads(out.getvalue())
        assert set(document) == {"config", "checkpoints", "tables", "run"}

        report, tables = load_report(out.getvalue())
        assert report.checkpoints == small_report.checkpoints
        assert report.config == small_report.config
        assert tables["eq5"] == table
        assert theorem3_table(report, 1.0) == theorem3_table(small_report, 1.0)

    def test_tables_only(self):
        """Test a document without a summation run."""
        table = VerifierFactory.create_verifier(
            VerifyOptions(target="eq12", n=100)
        ).verify(None)
        out = io.StringIO()
        dump_json(report_document(None, [table]), out)
        report, tables = load_report(out.getvalue())
        assert report is None
        assert tables["eq12"].rows == table.rows

    def test_table_csv(self, small_report):
        """Test the flat CSV of a verification table."""
        table = VerifierFactory.create_verifier(VerifyOptions(target="eq5")).verify(small_report)
        out = io.StringIO()
        write_table_csv(out, table)
        lines = out.getvalue().splitlines()
        assert lines[0] == "x,sum_f_hard,scaled"
        assert lines[1].startswith("10,15,")
