"""
CSV and JSON emission for checkpoints and verification tables.

Integers are written in full decimal, reals with 12 significant digits
in CSV; JSON keeps full float precision so a stored report reproduces
its tables exactly.
"""
import csv
import json
import logging
from typing import Any, Dict, Iterable, List, Optional, TextIO, Tuple

from ..models.reports import VerificationTable
from ..models.sums import Checkpoint, RunReport

logger = logging.getLogger(__name__)


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".12g")
    return "" if value is None else str(value)


class CheckpointCsvWriter:
    """Streams checkpoint rows, flushing after each so partial runs survive."""

    def __init__(self, stream: TextIO, ks: Iterable[int], orders: Iterable[int]):
        self.stream = stream
        self.columns = Checkpoint.columns(ks, orders)
        self.writer = csv.writer(stream, lineterminator="\n")
        self.rows_written = 0

    def write_header(self) -> None:
        self.writer.writerow(self.columns)
        self.stream.flush()

    def write(self, checkpoint: Checkpoint) -> None:
        self.writer.writerow([format_cell(checkpoint.value(c)) for c in self.columns])
        self.stream.flush()
        self.rows_written += 1


def write_table_csv(stream: TextIO, table: VerificationTable) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_cell(row.get(c)) for c in table.columns])
    stream.flush()


def report_document(report: Optional[RunReport],
                    tables: Optional[List[VerificationTable]] = None) -> Dict[str, Any]:
    """The single JSON object emitted by the CLI."""
    document: Dict[str, Any] = {
        "config": report.config.model_dump() if report else None,
        "checkpoints": [cp.model_dump() for cp in report.checkpoints] if report else [],
        "tables": {t.target: t.model_dump() for t in tables or []},
    }
    if report:
        document["run"] = {
            "started_at": report.started_at,
            "elapsed_seconds": report.elapsed_seconds,
            "notes": report.notes,
        }
    return document


def dump_json(document: Dict[str, Any], stream: TextIO) -> None:
    json.dump(document, stream, indent=2)
    stream.write("\n")
    stream.flush()


def load_report(text: str) -> Tuple[Optional[RunReport], Dict[str, VerificationTable]]:
    """Parse a CLI JSON document back into a RunReport and its tables."""
    document = json.loads(text)
    tables = {name: VerificationTable.model_validate(t)
              for name, t in (document.get("tables") or {}).items()}
    if document.get("config") is None:
        return None, tables
    run = document.get("run") or {}
    report = RunReport.model_validate({
        "config": document["config"],
        "checkpoints": document.get("checkpoints", []),
        "started_at": run.get("started_at"),
        "elapsed_seconds": run.get("elapsed_seconds"),
        **({"notes": run["notes"]} if "notes" in run else {}),
    })
    logger.debug(f"Loaded report with {len(report.checkpoints)} checkpoints")
    return report, tables
