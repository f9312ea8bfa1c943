"""Small helpers for bundled data files and line-delimited records."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

PACKAGE_DATA = Path(__file__).parent / "data"


class DataFileError(ValueError):
    """Raised with file and line context when a data file is malformed."""

    def __init__(self, path, line_no: int | None, message: str):
        self.path = str(path)
        self.line_no = line_no
        where = f"{path}:{line_no}" if line_no is not None else str(path)
        super().__init__(f"{where}: {message}")


def data_path(relative: str, root: Path | None = None) -> Path:
    return (root or PACKAGE_DATA) / relative


def read_jsonl(path: str | Path) -> list[tuple[int, dict]]:
    """Parse a JSONL file into (line_no, record) pairs.

    Line numbers are kept so loaders can raise DataFileError pointing
    at the offending line even though blanks and comments are skipped.
    """
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                records.append((line_no, json.loads(line)))
            except json.JSONDecodeError as exc:
                raise DataFileError(path, line_no, f"invalid record: {exc}") from exc
    return records


def write_jsonl(path: str | Path, records: list[dict]) -> None:
    """Atomic write: the file either has the old content or all of the new."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
                fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_wordlist(path: str | Path) -> list[str]:
    """One entry per line; blank lines and '#' comments skipped."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                entries.append(line)
    return entries
