"""
Repository data locations.

Tables and fixtures ship inside the repository; XDELTA_FIXTURES_DIR may name
an extra directory of user-supplied forms files (e.g. high-precision bases
exported from a modular-forms package).
"""
from __future__ import annotations

import os
from pathlib import Path

FIXTURES_ENV = "XDELTA_FIXTURES_DIR"


class RepoPaths:
    """Resolves data directories relative to the repository root."""

    def __init__(self, root: Path | None = None):
        self.root = root or Path(__file__).resolve().parents[2]

    @property
    def tables_dir(self) -> Path:
        return self.root / "data" / "tables"

    @property
    def fixtures_dir(self) -> Path:
        return self.root / "fixtures"

    @property
    def extra_fixtures_dir(self) -> Path | None:
        raw = os.environ.get(FIXTURES_ENV, "").strip()
        return Path(raw) if raw else None


_paths = RepoPaths()

repo_root = _paths.root
tables_dir = _paths.tables_dir
fixtures_dir = _paths.fixtures_dir


def extra_fixtures_dir() -> Path | None:
    return _paths.extra_fixtures_dir
