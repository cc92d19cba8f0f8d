"""
Result serialization module.

Every output file carries the run metadata (configuration hash, version, subcommand, boundary and
tolerances):

- CSV files start with ``# key: value`` lines, followed by the header row and the data rows.
  Floats are written with 17 significant digits, the separator is a comma and lines end with LF.
- JSON documents hold the metadata under the top-level ``"metadata"`` key.
- SVG files embed it as an XML comment (see `plots`).

Files are written atomically: the text goes to a temporary file in the target directory, which
is then renamed over the destination.

Functions:
    - format_value: Render a CSV cell.
    - build_metadata: Metadata dictionary of a run.
    - metadata_lines: Metadata as ``key: value`` lines.
    - csv_text: CSV document with metadata header.
    - json_text: JSON document with metadata.
    - state_rows: Rows ``x, re0, im0, re1, im1, prob`` of a state.
    - atomic_write: Write a text file atomically.
"""

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from ..lattice.state import State
from ..version import __version__

STATE_HEADER: tuple[str, ...] = ("x", "re0", "im0", "re1", "im1", "prob")
SPECTRUM_HEADER: tuple[str, ...] = ("re", "im", "phase", "modulus", "label", "loc_measure")


def format_value(value: Any) -> str:
    """CSV cell: floats with 17 significant digits, everything else via `str`."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def build_metadata(
    config_hash: str,
    subcommand: str,
    tolerances: Optional[dict[str, Any]] = None,
    **extra: Any,
) -> dict[str, Any]:
    """
    Metadata dictionary of a run.

    Args:
        config_hash (str): SHA-256 of the canonical configuration.
        subcommand (str): Subcommand name.
        tolerances (Optional[dict[str, Any]], optional): Tolerance values used.
        **extra: Further entries (e.g. boundary, time step).

    Returns:
        dict[str, Any]: Metadata with keys in a fixed order.
    """
    meta: dict[str, Any] = {
        "config_hash": config_hash,
        "version": __version__,
        "subcommand": subcommand,
    }
    meta.update(extra)
    meta["tolerances"] = tolerances if tolerances is not None else {}
    return meta


def metadata_lines(metadata: dict[str, Any]) -> list[str]:
    """Metadata rendered as ``key: value`` lines; non-string values as compact JSON."""
    lines = []
    for key, value in metadata.items():
        text = value if isinstance(value, str) else json.dumps(value, separators=(",", ":"))
        lines.append(f"{key}: {text}")
    return lines


def csv_text(
    header: Sequence[str], rows: Iterable[Sequence[Any]], metadata: dict[str, Any]
) -> str:
    """
    CSV document with ``#``-prefixed metadata lines.

    Args:
        header (Sequence[str]): Column names.
        rows (Iterable[Sequence[Any]]): Data rows.
        metadata (dict[str, Any]): Run metadata.

    Returns:
        str: The document, LF line endings.
    """
    buffer = io.StringIO()
    for line in metadata_lines(metadata):
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def json_text(payload: dict[str, Any], metadata: dict[str, Any]) -> str:
    """JSON document with the payload keys followed by ``"metadata"``."""
    document = dict(payload)
    document["metadata"] = metadata
    return json.dumps(document, indent=2) + "\n"


def state_rows(state: State) -> list[list[Any]]:
    """Rows ``x, re0, im0, re1, im1, prob``, one per window site."""
    probs = state.probabilities()
    rows = []
    for k, x in enumerate(state.window.sites):
        a0, a1 = state.amp[k]
        rows.append(
            [
                int(x),
                float(a0.real),
                float(a0.imag),
                float(a1.real),
                float(a1.imag),
                float(probs[k]),
            ]
        )
    return rows


def atomic_write(path: Path, text: str) -> Path:
    """
    Write a text file atomically (temporary file in the same directory, then rename).

    Args:
        path (Path): Destination; parent directories are created.
        text (str): File content, written as UTF-8 with LF line endings.

    Returns:
        Path: The destination path.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path
