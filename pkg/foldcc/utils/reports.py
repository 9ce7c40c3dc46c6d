"""
Writing sweep rows and run summaries.

CSV for sweeps (header row, comma separated), JSON for single-run summaries.
Both are written once, at the end of a command, with deterministic ordering.
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def rows_to_csv(rows: Sequence[Mapping[str, str]]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def summary_to_json(summary: Mapping[str, Any]) -> str:
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"


def write_text(text: str, path: Optional[PathLike]) -> None:
    """Write ``text`` to ``path``, creating parent directories; no-op for None."""
    if path is None:
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text)
    logger.info(f"Wrote {len(text)} bytes to {target}")


def format_table(rows: Sequence[Mapping[str, str]]) -> str:
    """Fixed-width human-readable table of the rows."""
    if not rows:
        return ""
    columns = list(rows[0])
    widths = {c: max(len(c), *(len(row[c]) for row in rows)) for c in columns}
    lines = ["  ".join(c.rjust(widths[c]) for c in columns)]
    lines.append("  ".join("-" * widths[c] for c in columns))
    lines.extend("  ".join(row[c].rjust(widths[c]) for c in columns) for row in rows)
    return "\n".join(lines)
