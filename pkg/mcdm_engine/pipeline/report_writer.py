"""
Report files: the run report (JSON) and the selection matrix (CSV).
"""

import csv
import io
import json
from pathlib import Path
from typing import Optional, Tuple

from ..error_handler import ErrorHandler
from ..exceptions import DocumentError
from ..registry import SelectionReport
from ..requirements import CANONICAL_ATTRIBUTES
from ..shared_logger import LogLevel, shared_logger

CLASS_PREFIX_MESSAGE = "[ReportWriter]"

REPORT_FILE_NAME = "report.json"
MATRIX_FILE_NAME = "selection_matrix.csv"


def emit_matrix(report: SelectionReport, path=None, full_grid: bool = False) -> str:
    """
    @brief Render the 0/1 selection matrix.

    First column holds the expressed attributes in canonical order, then one
    column per method and a closing "candidate" row. With full_grid every
    canonical attribute gets a row; unexpressed ones have blank cells.

    @param report Selection report to render
    @param path Optional file to write (UTF-8, "\\n" line endings)
    @return The matrix text
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["requirement", *report.methods])
    attributes = CANONICAL_ATTRIBUTES if full_grid else report.attributes
    for attribute in attributes:
        if attribute in report.attributes:
            cells = [str(c) for c in report.row(attribute)]
        else:
            cells = ["" for _ in report.methods]
        writer.writerow([attribute.value, *cells])
    writer.writerow(
        ["candidate", *("1" if m in report.candidates else "0" for m in report.methods)]
    )
    text = buffer.getvalue()

    if path is not None:
        _write_text(Path(path), text)
    return text


def render_report(report) -> str:
    """Canonical JSON of a run report: sorted keys, no timestamps."""
    return json.dumps(report.to_document(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_run_outputs(report, output_dir) -> Tuple[Path, Optional[Path]]:
    """
    @brief Write report.json and, when a selection happened, selection_matrix.csv.
    @return (report path, matrix path or None)
    """
    output_dir = Path(output_dir)
    report_path = output_dir / REPORT_FILE_NAME
    _write_text(report_path, render_report(report))

    matrix_path = None
    if report.selection_report is not None:
        matrix_path = output_dir / MATRIX_FILE_NAME
        emit_matrix(report.selection_report, matrix_path)

    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Run outputs written to {output_dir}"
    )
    return report_path, matrix_path


def _write_text(path: Path, text: str) -> None:
    with ErrorHandler.translate(CLASS_PREFIX_MESSAGE, DocumentError, f"Cannot write {path}"):
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
