"""
Core run/report API.  Every CLI command (xdelta.py) is a thin wrapper
around one function here; each returns the report text plus an exit status.

Usage:
    from src.report import genus_report, tables_report

    text, status = genus_report(21, "8")
    text, status = tables_report(1, output_format="csv")

Output is deterministic: fixed column order, fixed widths, no colour, "\\n"
newlines.
"""
from __future__ import annotations

import csv
import io
import logging

from rich import box
from rich.console import Console
from rich.table import Table

from .arith import SubgroupDelta, check_level, enumerate_subgroups, parse_delta_spec
from .canonical import (
    cubic_relations,
    hyperelliptic_test,
    petri_from_quadrics,
    petri_test,
    quadratic_relations,
    sturm_precision,
)
from .formsio import fixtures, load, load_quadrics
from .gonality import abramovich_bound, classify, enumeration_coverage, reproduce_table
from .gonality.tables import MARKER_SYMBOLS, TABLE_CAPTIONS, ReproducedRow
from .gonality.tags import label as tag_label
from .modcurve import cusp_orbits, genus
from .utils.config import Mode, OutputFormat

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_MISMATCH = 3

_WIDTH = 120


def _render(*renderables) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=_WIDTH, color_system=None, force_terminal=False,
                      highlight=False, soft_wrap=False)
    for item in renderables:
        console.print(item)
    return buffer.getvalue()


def _table(columns: list[str], rows: list[list[str]], title: str | None = None) -> Table:
    table = Table(title=title, box=box.SIMPLE_HEAD, show_edge=False)
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*row)
    return table


def _csv(columns: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def _markdown(columns: list[str], rows: list[list[str]], title: str | None = None) -> str:
    lines = [f"**{title}**", ""] if title else []
    lines.append("| " + " | ".join(columns) + " |")
    lines.append("|" + "|".join("---" for _ in columns) + "|")
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _emit(columns, rows, output_format: OutputFormat, title: str | None = None) -> str:
    if output_format == "csv":
        return _csv(columns, rows)
    if output_format == "md":
        return _markdown(columns, rows, title)
    return _render(_table(columns, rows, title))


def _reps(delta: SubgroupDelta) -> str:
    return " ".join(str(r) for r in delta.representatives)


def _marker(marker: int, output_format: OutputFormat) -> str:
    # csv keeps the numeric code of the TSV files.
    if output_format == "csv":
        return str(marker)
    return MARKER_SYMBOLS[marker] or "-"


def _check(reproduced: ReproducedRow, output_format: OutputFormat) -> str:
    if output_format == "csv":
        return str(len(reproduced.mismatches))
    return "ok" if reproduced.ok else "MISMATCH"


# ── genus ────────────────────────────────────────────────────────────────────

def genus_report(
    level: int,
    delta_spec: str | None,
    output_format: OutputFormat = "plain",
    ceiling: int | str = "auto",
) -> tuple[str, int]:
    check_level(level, ceiling)
    delta = parse_delta_spec(level, delta_spec)
    inv = genus(level, delta)
    summary = [
        ["N", str(level)],
        ["Delta", f"{delta.label} = {list(delta.residues)}"],
        ["mu", str(inv.mu)],
        ["nu2", str(inv.nu2)],
        ["nu3", str(inv.nu3)],
        ["nu_inf", str(inv.nu_inf)],
        ["genus", str(inv.genus)],
    ]
    cusp_cols = ["d", "cusps", "|pi_d(Delta)|", "e_p", "e_p1", "e_p2"]
    cusp_rows = [
        [str(o.divisor), str(o.orbit_count), str(o.image_order), str(o.e_total), str(o.e_p1), str(o.e_p2)]
        for o in cusp_orbits(level, delta)
    ]
    if output_format == "plain":
        text = _render(_table(["field", "value"], summary), _table(cusp_cols, cusp_rows, "cusps"))
    else:
        text = _emit(["field", "value"], summary, output_format) + "\n" + _emit(cusp_cols, cusp_rows, output_format, "cusps")
    return text, EXIT_OK


# ── enumerate ────────────────────────────────────────────────────────────────

def enumerate_report(level: int, output_format: OutputFormat = "plain", ceiling: int | str = "auto") -> tuple[str, int]:
    columns = ["Delta", "|Delta|", "mu", "genus", "gon >=", "kind"]
    rows = []
    for delta in enumerate_subgroups(level, ceiling):
        inv = genus(level, delta)
        bound = abramovich_bound(inv.mu)
        kind = "X_0" if delta.is_full else "X_1" if delta.is_trivial else "intermediate"
        if delta.is_full and delta.is_trivial:
            kind = "X_0 = X_1"
        rows.append([delta.label, str(delta.order), str(inv.mu), str(inv.genus),
                     str(bound.gonality_lower_bound), kind])
    return _emit(columns, rows, output_format, f"subgroups of (Z/{level}Z)* containing ±1"), EXIT_OK


# ── classify ─────────────────────────────────────────────────────────────────

def classify_report(
    level: int,
    delta_spec: str | None,
    forms_path: str | None = None,
    mode: Mode = "probe",
    output_format: OutputFormat = "plain",
    ceiling: int | str = "auto",
) -> tuple[str, int]:
    check_level(level, ceiling)
    delta = parse_delta_spec(level, delta_spec)
    basis = None
    if forms_path:
        basis = load(forms_path).to_basis(mode)
    verdict = classify(level, delta, basis)

    summary = [
        ["curve", f"X_{delta.label}({level})"],
        ["genus", str(verdict.genus)],
        ["mu", str(verdict.mu)],
        ["sub-hyperelliptic", verdict.sub_hyperelliptic],
        ["hyperelliptic", verdict.hyperelliptic],
        ["trigonal", verdict.trigonal],
    ]
    evidence_rows = [
        [str(i), tag_label(fact.tag), fact.provenance,
         ", ".join(f"{p}={v}" for p, v in fact.decides) or "-", fact.detail]
        for i, fact in enumerate(verdict.evidence, start=1)
    ]
    evidence_cols = ["#", "evidence", "provenance", "decides", "detail"]
    if output_format == "plain":
        text = _render(_table(["field", "value"], summary), _table(evidence_cols, evidence_rows, "evidence"))
    else:
        text = _emit(["field", "value"], summary, output_format) + "\n" + _emit(evidence_cols, evidence_rows, output_format, "evidence")
    return text, EXIT_OK


# ── tables ───────────────────────────────────────────────────────────────────

def tables_report(table_id: int, output_format: OutputFormat = "md") -> tuple[str, int]:
    """Recomputed table plus mismatch lines; status EXIT_MISMATCH on any disagreement."""
    reproduced = reproduce_table(table_id)
    columns = ["N", "Delta", "genus", "mu", "marker", "computed marker", "check"]
    rows = []
    for r in reproduced:
        row = r.row
        if row.delta is None:
            rows.append([str(row.level), "-", "-", "-", _marker(row.marker, output_format),
                         _marker(r.computed_marker, output_format), _check(r, output_format)])
            continue
        delta_text = _reps(row.delta) if output_format == "csv" else f"{row.name} = {row.delta.label}"
        rows.append([
            str(row.level),
            delta_text,
            str(r.invariants.genus),
            str(r.invariants.mu),
            _marker(row.marker, output_format),
            _marker(r.computed_marker, output_format),
            _check(r, output_format),
        ])
    text = _emit(columns, rows, output_format, f"Table {table_id}: {TABLE_CAPTIONS[table_id]}")

    problems = [f"N={r.row.level} {r.row.name}: {m}" for r in reproduced for m in r.mismatches]
    for level, (missing, extra) in enumeration_coverage(table_id).items():
        problems += [f"N={level}: missing {s.label}" for s in missing]
        problems += [f"N={level}: {s.label} is not a proper intermediate" for s in extra]
    if problems:
        text += "".join(f"mismatch: {p}\n" for p in problems)
        return text, EXIT_MISMATCH
    if output_format != "csv":
        text += f"{len(rows)} rows, 0 mismatches\n"
    return text, EXIT_OK


# ── relations / petri ────────────────────────────────────────────────────────

def relations_report(forms_path: str, degree: int = 2, mode: Mode = "probe") -> tuple[str, int]:
    basis = load(forms_path).to_basis(mode)
    relations = quadratic_relations(basis) if degree == 2 else cubic_relations(basis)
    grade = "probe" if relations.heuristic else "certified"
    lines = [
        f"X_{basis.delta.label}({basis.level}): genus {basis.genus}, precision {basis.precision}",
        f"degree-{degree} relations: {relations.dimension} ({grade}"
        + (", underdetermined" if relations.underdetermined else "") + ")",
    ]
    lines += [f"  {poly}" for poly in relations.polynomials()]
    if degree == 2 and basis.genus >= 3 and not relations.underdetermined:
        lines.append(f"hyperelliptic test: {hyperelliptic_test(basis.genus, relations.dimension)}")
    if relations.heuristic:
        lines.append(f"certify needs precision >= {sturm_precision(basis.mu, degree)}")
    return "\n".join(lines) + "\n", EXIT_OK


def _petri_lines(report, title: str, grade: str) -> list[str]:
    lines = [
        title,
        f"r2 = {report.r2}",
        f"r3 expected = {report.r3_expected}",
        f"r3 observed = {report.r3_observed if report.r3_observed is not None else '-'}",
        f"dim L' = {report.dim_L_prime}",
        f"cubic generators = {report.cubic_generators}",
        f"verdict = {report.verdict} ({grade})",
    ]
    if report.plane_quintic_possible:
        lines.append("note: genus 6, a smooth plane quintic is also possible")
    return lines


def petri_report(
    forms_path: str | None = None,
    quadrics_path: str | None = None,
    mode: Mode = "probe",
) -> tuple[str, int]:
    if bool(forms_path) == bool(quadrics_path):
        raise ValueError("petri needs exactly one of a forms file or --quadrics")
    if quadrics_path:
        qf = load_quadrics(quadrics_path)
        report = petri_from_quadrics(qf.genus, qf.quadrics)
        title = f"X_{qf.subgroup.label}({qf.level}): Petri count from {len(qf.quadrics)} given quadrics"
        grade = "polynomial algebra on given quadrics"
    else:
        basis = load(forms_path).to_basis(mode)
        report = petri_test(basis)
        title = f"X_{basis.delta.label}({basis.level}): Petri count at precision {basis.precision}"
        grade = "probe" if report.heuristic else "certified"
    return "\n".join(_petri_lines(report, title, grade)) + "\n", EXIT_OK


def fixtures_report(output_format: OutputFormat = "plain") -> tuple[str, int]:
    columns = ["N", "Delta", "genus", "precision", "certify needs"]
    rows = []
    for ff in fixtures():
        inv = genus(ff.level, ff.subgroup)
        rows.append([str(ff.level), ff.subgroup.label, str(ff.genus), str(ff.precision),
                     str(sturm_precision(inv.mu, 2))])
    return _emit(columns, rows, output_format, "bundled forms files"), EXIT_OK
