"""
Embedded appendix tables.

One TSV file per table under data/tables/, checked against SHA256SUMS on
first load.  Line format:

    N <TAB> ± representatives "1,8" or "-" <TAB> genus or "-" <TAB> marker 0|1|2

Markers: 1 (dagger) means the Abramovich bound rules out gonality 2,
2 (double dagger) means it rules out gonality 3.
"""
from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Literal

from ..arith import ArithError, SubgroupDelta, closure, enumerate_subgroups
from ..modcurve import CurveInvariants, genus
from ..utils.paths import tables_dir
from .bound import rules_out_gonality

logger = logging.getLogger(__name__)

TableId = Literal[1, 2, 3]
TABLE_IDS: tuple[int, ...] = (1, 2, 3)

NO_MARKER, DAGGER, DOUBLE_DAGGER = 0, 1, 2
MARKER_SYMBOLS = {NO_MARKER: "", DAGGER: "†", DOUBLE_DAGGER: "‡"}

TABLE_CAPTIONS = {
    1: "X_Delta(N) and their genera when X_0(N) has genus <= 2",
    2: "X_Delta(N) and their genera when X_0(N) is hyperelliptic of genus > 2",
    3: "X_Delta(N) and their genera when X_0(N) is trigonal but not sub-hyperelliptic",
}

CHECKSUM_FILE = "SHA256SUMS"


class TableDataError(ValueError):
    """Embedded table data is corrupt or inconsistent."""


@dataclass(frozen=True)
class TableRow:
    table_id: int
    level: int
    delta: SubgroupDelta | None      # None for the "-" rows
    genus: int | None
    marker: int
    index: int                       # i in Delta_i within the level; 0 for "-" rows

    @property
    def name(self) -> str:
        return f"Delta_{self.index}" if self.delta is not None else "-"


@dataclass(frozen=True)
class ReproducedRow:
    row: TableRow
    invariants: CurveInvariants | None
    computed_marker: int
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _check_table_id(table_id: int) -> int:
    if table_id not in TABLE_IDS:
        raise KeyError(f"Unknown table '{table_id}'. Available: {list(TABLE_IDS)}")
    return table_id


def table_path(table_id: int, directory: Path | None = None) -> Path:
    return (directory or tables_dir) / f"table{_check_table_id(table_id)}.tsv"


def verify_checksums(directory: Path | None = None) -> None:
    """Compare every table file with its entry in SHA256SUMS."""
    directory = directory or tables_dir
    manifest = directory / CHECKSUM_FILE
    if not manifest.is_file():
        raise TableDataError(f"checksum manifest not found: {manifest}")
    expected: dict[str, str] = {}
    for line in manifest.read_text(encoding="utf-8").splitlines():
        if line.strip():
            digest, name = line.split(maxsplit=1)
            expected[name.lstrip("*")] = digest
    for table_id in TABLE_IDS:
        path = table_path(table_id, directory)
        if path.name not in expected:
            raise TableDataError(f"{path.name} is missing from {CHECKSUM_FILE}")
        actual = hashlib.sha256(path.read_bytes()).hexdigest()
        if actual != expected[path.name]:
            raise TableDataError(f"{path.name}: checksum {actual} does not match {CHECKSUM_FILE}")
    logger.debug("table checksums verified in %s", directory)


def parse_table(table_id: int, text: str, source: str = "<table>") -> tuple[TableRow, ...]:
    rows: list[TableRow] = []
    counters: dict[int, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        where = f"{source}:{line_no}"
        fields = raw.split("\t")
        if len(fields) != 4:
            raise TableDataError(f"{where}: expected 4 tab-separated fields, got {len(fields)}")
        level_s, reps_s, genus_s, marker_s = (f.strip() for f in fields)
        try:
            level = int(level_s)
            marker = int(marker_s)
            genus_value = None if genus_s == "-" else int(genus_s)
            reps = None if reps_s == "-" else [int(r) for r in reps_s.split(",")]
        except ValueError as exc:
            raise TableDataError(f"{where}: {exc}") from None
        if marker not in MARKER_SYMBOLS:
            raise TableDataError(f"{where}: marker must be 0, 1 or 2, got {marker}")

        delta = None
        index = 0
        if reps is not None:
            try:
                delta = closure(level, reps)
            except ArithError as exc:
                raise TableDataError(f"{where}: {exc}") from None
            expected_order = 2 * len(set(reps)) if level > 2 else 1
            if delta.order != expected_order:
                raise TableDataError(
                    f"{where}: ±{reps} generates a subgroup of order {delta.order}, "
                    f"not the {expected_order} elements listed"
                )
            counters[level] = counters.get(level, 0) + 1
            index = counters[level]
        rows.append(TableRow(table_id, level, delta, genus_value, marker, index))
    return tuple(rows)


@lru_cache(maxsize=None)
def load_table(table_id: int) -> tuple[TableRow, ...]:
    """Rows of one embedded table, in file order."""
    verify_checksums()
    path = table_path(table_id)
    return parse_table(table_id, path.read_text(encoding="utf-8"), path.name)


def table_levels(table_id: int) -> frozenset[int]:
    return frozenset(row.level for row in load_table(table_id))


def candidate_levels(d: int) -> frozenset[int]:
    """
    Levels N where X_0(N), and so possibly some X_Delta(N), has gonality <= d.

    d = 2: genus <= 2 or hyperelliptic X_0(N) (Tables 1 and 2).
    d = 3: additionally the trigonal X_0(N) levels of table3.tsv.
    """
    if d == 2:
        return table_levels(1) | table_levels(2)
    if d == 3:
        return table_levels(1) | table_levels(2) | table_levels(3)
    raise ValueError(f"candidate levels are tabulated for d = 2 or 3, got {d}")


def computed_marker(table_id: int, mu: int) -> int:
    """Marker the bound assigns: table 2 tests d = 2 only, tables 1 and 3 test d = 2 and d = 3."""
    if table_id != 2 and rules_out_gonality(mu, 3):
        return DOUBLE_DAGGER
    if rules_out_gonality(mu, 2):
        return DAGGER
    return NO_MARKER


def proper_intermediates(level: int) -> list[SubgroupDelta]:
    """Subgroups strictly between {±1} and the full unit group."""
    return [s for s in enumerate_subgroups(level) if not s.is_trivial and not s.is_full]


def _reproduce_row(row: TableRow) -> ReproducedRow:
    if row.delta is None:
        found = proper_intermediates(row.level)
        mismatches = ()
        if found:
            labels = ", ".join(s.label for s in found)
            mismatches = (f"level {row.level} has proper intermediate subgroups: {labels}",)
        return ReproducedRow(row, None, NO_MARKER, mismatches)

    inv = genus(row.level, row.delta)
    marker = computed_marker(row.table_id, inv.mu)
    problems = []
    if row.genus != inv.genus:
        problems.append(f"genus {inv.genus} != transcribed {row.genus}")
    # Only three marker claims are checked: dagger rows fail d = 2, double-dagger
    # rows fail d = 3, unmarked table 2 rows pass d = 2.
    if row.marker == DAGGER and not rules_out_gonality(inv.mu, 2):
        problems.append(f"dagger but 119*{inv.mu} <= 24000")
    if row.marker == DOUBLE_DAGGER and not rules_out_gonality(inv.mu, 3):
        problems.append(f"double dagger but 119*{inv.mu} <= 36000")
    if row.table_id == 2 and row.marker == NO_MARKER and rules_out_gonality(inv.mu, 2):
        problems.append(f"unmarked but 119*{inv.mu} > 24000")
    return ReproducedRow(row, inv, marker, tuple(problems))


def reproduce_table(table_id: int) -> list[ReproducedRow]:
    """Recompute genus and marker for every row; mismatches are reported, never raised."""
    result = [_reproduce_row(row) for row in load_table(_check_table_id(table_id))]
    bad = sum(1 for r in result if not r.ok)
    if bad:
        logger.warning("table %d: %d row(s) disagree with the transcription", table_id, bad)
    return result


def enumeration_coverage(table_id: int) -> dict[int, tuple[list[SubgroupDelta], list[SubgroupDelta]]]:
    """
    Per level with a problem: (proper intermediates missing from the table,
    table subgroups that are not proper intermediates).  Empty when complete.
    """
    by_level: dict[int, set[tuple[int, ...]]] = {}
    listed: dict[int, list[SubgroupDelta]] = {}
    for row in load_table(_check_table_id(table_id)):
        by_level.setdefault(row.level, set())
        listed.setdefault(row.level, [])
        if row.delta is not None:
            by_level[row.level].add(row.delta.residues)
            listed[row.level].append(row.delta)
    problems = {}
    for level, residues in sorted(by_level.items()):
        actual = proper_intermediates(level)
        actual_set = {s.residues for s in actual}
        missing = [s for s in actual if s.residues not in residues]
        extra = [s for s in listed[level] if s.residues not in actual_set]
        if missing or extra:
            problems[level] = (missing, extra)
    return problems
