"""
Output store for run artifacts.

Commands open the store on an output directory before they run and close it
afterwards; writers resolve file names against the open directory.
"""
import json
import logging
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from models.field import Field
from models.report import PropertyReport
from settings import settings

logger = logging.getLogger(__name__)

NUMBER_FORMAT = "%.16e"


class OutputStore:
    """Output directory manager."""

    directory: Optional[Path] = None


output_store = OutputStore()


def open_output_store(directory: str | Path | None = None) -> Path:
    """
    Create (if needed) and select the output directory.
    Falls back to settings.OUTPUT_DIR.
    """
    path = Path(directory or settings.OUTPUT_DIR)
    if not str(path):
        raise ValueError("an output directory must be given or configured in settings")
    path.mkdir(parents=True, exist_ok=True)
    output_store.directory = path
    logger.info("writing artifacts to %s", path)
    return path


def close_output_store() -> None:
    if output_store.directory is not None:
        logger.debug("closed output store %s", output_store.directory)
    output_store.directory = None


def get_output_dir() -> Path:
    """
    Get the current output directory.

    Raises:
        RuntimeError: If no output store is open
    """
    if output_store.directory is None:
        raise RuntimeError(
            "Output store not open. "
            "Make sure to call open_output_store() before writing artifacts."
        )
    return output_store.directory


def _header_lines(header: Iterable[str]) -> str:
    return "\n".join(str(line) for line in header)


def write_table(name: str, columns: Sequence[str], rows, header: Iterable[str] = ()) -> Path:
    """
    Write a numeric table as CSV with '#'-prefixed provenance lines.

    An empty `rows` writes the header and column names only.
    """
    path = get_output_dir() / name
    data = np.asarray(rows, dtype=float).reshape(-1, len(columns))
    comments = _header_lines(header)
    np.savetxt(
        path,
        data,
        fmt=NUMBER_FORMAT,
        delimiter=",",
        header=(comments + "\n" if comments else "") + ",".join(columns),
        comments="# ",
    )
    logger.debug("wrote %s (%d rows)", path, len(data))
    return path


def write_field_csv(name: str, field: Field, header: Iterable[str] = ()) -> Path:
    """Write a grid field as columns x, p."""
    provenance = [f"t: {field.t!r}", f"half_width: {field.grid.half_width!r}", f"points: {field.grid.points}"]
    return write_table(name, ["x", "p"], np.column_stack([field.grid.x, field.values]),
                       header=provenance + list(header))


def write_report_json(name: str, report: PropertyReport) -> Path:
    """Write a report with its overall verdict, checks and warnings."""
    return write_json(name, report.summary())


def write_json(name: str, payload: dict) -> Path:
    path = get_output_dir() / name
    path.write_text(json.dumps(payload, indent=2, sort_keys=True))
    return path
