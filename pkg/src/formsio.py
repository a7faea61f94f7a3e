"""
Cusp-form basis files.

Format (UTF-8, one record per line, single spaces, trailing newline):

    # free comments; leading ones are kept as provenance
    level 21
    delta 1 8 13 20
    genus 3
    precision 10
    form 0 1 -1 1 -1 -2 -1 -1 3 1 2
    form ...

Headers appear once each, in that order, followed by exactly `genus` form
lines of precision+1 coefficients (integers or p/q).  Externally computed
bases use the same format; record where they came from in the leading
comments.

Quadric files (for the Petri count when only polynomials are known):

    level 32
    delta 1 15 17 31
    genus 5
    quadric x1^2 + x2^2 + 2*x2*x3 - 8*x4*x5
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from tokenize import TokenError

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .arith import ArithError, SubgroupDelta, closure
from .canonical import CanonicalBasis
from .modcurve import genus as curve_genus
from .qlinalg import QSeries, monomials
from .utils.config import Mode
from .utils.paths import extra_fixtures_dir, fixtures_dir

logger = logging.getLogger(__name__)

_HEADERS = ("level", "delta", "genus", "precision")
_QUADRIC_HEADERS = ("level", "delta", "genus")


class FormsFileError(ValueError):
    """Base class for every forms / quadric file problem."""


class MalformedLineError(FormsFileError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class DuplicateHeaderError(FormsFileError):
    def __init__(self, line_no: int, key: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: duplicate header '{key}'")


class GenusMismatchError(FormsFileError):
    """Declared genus disagrees with the row count or with the genus formula."""


class NonCuspFormError(FormsFileError):
    def __init__(self, line_no: int, a0: Fraction):
        self.line_no = line_no
        super().__init__(f"line {line_no}: constant term {a0} is not 0; cusp forms only")


class EmptyFormsError(FormsFileError):
    """A forms file with no forms."""


@dataclass(frozen=True)
class FormsFile:
    level: int
    delta: tuple[int, ...]
    genus: int
    precision: int
    forms: tuple[tuple[Fraction, ...], ...]
    provenance: tuple[str, ...] = field(default=(), compare=False)

    @property
    def subgroup(self) -> SubgroupDelta:
        return SubgroupDelta(self.level, self.delta)

    def series(self) -> list[QSeries]:
        return [QSeries(row) for row in self.forms]

    def to_basis(self, mode: Mode = "probe") -> CanonicalBasis:
        return CanonicalBasis.build(self.level, self.subgroup, self.series(), mode)


@dataclass(frozen=True)
class QuadricsFile:
    level: int
    delta: tuple[int, ...]
    genus: int
    quadrics: tuple[tuple[Fraction, ...], ...]    # over monomials(genus, 2)
    provenance: tuple[str, ...] = field(default=(), compare=False)

    @property
    def subgroup(self) -> SubgroupDelta:
        return SubgroupDelta(self.level, self.delta)


# ── Parsing ──────────────────────────────────────────────────────────────────

def _records(text: str) -> tuple[list[tuple[int, str, list[str]]], list[str]]:
    """Split into (line_no, keyword, fields), collecting leading comments."""
    records = []
    provenance: list[str] = []
    lines = text.splitlines()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not records:
                provenance.append(line[1:].strip())
            continue
        if raw != line or "  " in raw or "\t" in raw:
            raise MalformedLineError(line_no, "fields must be separated by single spaces")
        keyword, _, rest = line.partition(" ")
        records.append((line_no, keyword, rest.split(" ") if rest else []))
    if text and not text.endswith("\n"):
        raise MalformedLineError(len(lines), "file must end with a newline")
    return records, provenance


def _int(line_no: int, key: str, fields: list[str]) -> int:
    if len(fields) != 1:
        raise MalformedLineError(line_no, f"'{key}' takes one integer")
    try:
        return int(fields[0])
    except ValueError:
        raise MalformedLineError(line_no, f"'{key}' value {fields[0]!r} is not an integer") from None


def _rational(line_no: int, token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MalformedLineError(line_no, f"coefficient {token!r} is not a rational number") from None


def _read_headers(records, names: tuple[str, ...]) -> tuple[dict[str, tuple[int, list[str]]], int]:
    headers: dict[str, tuple[int, list[str]]] = {}
    pos = 0
    while pos < len(records) and records[pos][1] in names:
        line_no, key, fields = records[pos]
        if key in headers:
            raise DuplicateHeaderError(line_no, key)
        expected = names[len(headers)]
        if key != expected:
            raise MalformedLineError(line_no, f"expected header '{expected}', got '{key}'")
        headers[key] = (line_no, fields)
        pos += 1
    for key in names:
        if key not in headers:
            line_no = records[pos][0] if pos < len(records) else 0
            raise MalformedLineError(line_no, f"missing header '{key}'")
    return headers, pos


def _subgroup(headers) -> tuple[int, SubgroupDelta, int]:
    level_no, level_fields = headers["level"]
    level = _int(level_no, "level", level_fields)
    delta_no, delta_fields = headers["delta"]
    try:
        residues = [int(t) for t in delta_fields]
        delta = closure(level, residues)
    except (ValueError, ArithError) as exc:
        raise MalformedLineError(delta_no, f"bad delta: {exc}") from None
    if sorted(set(r % level if level > 1 else 1 for r in residues)) != list(delta.residues):
        raise MalformedLineError(delta_no, f"delta must list the full subgroup {list(delta.residues)}")
    genus_no, genus_fields = headers["genus"]
    declared = _int(genus_no, "genus", genus_fields)
    computed = curve_genus(level, delta).genus
    if declared != computed:
        raise GenusMismatchError(
            f"line {genus_no}: declared genus {declared}, but X_{delta.label}({level}) has genus {computed}"
        )
    return level, delta, declared


def parse(text: str) -> FormsFile:
    """Parse and validate a forms file."""
    records, provenance = _records(text)
    headers, pos = _read_headers(records, _HEADERS)
    level, delta, declared = _subgroup(headers)
    precision_no, precision_fields = headers["precision"]
    precision = _int(precision_no, "precision", precision_fields)
    if precision < 0:
        raise MalformedLineError(precision_no, f"precision must be >= 0, got {precision}")

    rows: list[tuple[Fraction, ...]] = []
    for line_no, key, fields in records[pos:]:
        if key in _HEADERS:
            raise DuplicateHeaderError(line_no, key)
        if key != "form":
            raise MalformedLineError(line_no, f"unknown record '{key}'")
        if len(fields) != precision + 1:
            raise MalformedLineError(
                line_no, f"form has {len(fields)} coefficients, precision {precision} needs {precision + 1}"
            )
        row = tuple(_rational(line_no, t) for t in fields)
        if row[0] != 0:
            raise NonCuspFormError(line_no, row[0])
        rows.append(row)

    if not rows:
        raise EmptyFormsError("the file declares no forms")
    if len(rows) != declared:
        raise GenusMismatchError(f"declared genus {declared} but {len(rows)} form lines")
    return FormsFile(level, delta.residues, declared, precision, tuple(rows), tuple(provenance))


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize(forms_file: FormsFile) -> str:
    """Canonical text: '\\n' newlines, ASCII digits, '/' for fractions."""
    if not forms_file.forms:
        raise EmptyFormsError("refusing to write a forms file with no forms")
    lines = [f"# {c}".rstrip() for c in forms_file.provenance]
    lines += [
        f"level {forms_file.level}",
        "delta " + " ".join(str(r) for r in forms_file.delta),
        f"genus {forms_file.genus}",
        f"precision {forms_file.precision}",
    ]
    lines += ["form " + " ".join(_format_rational(c) for c in row) for row in forms_file.forms]
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> FormsFile:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"forms file not found: {path}")
    return parse(path.read_text(encoding="utf-8"))


def fixtures() -> list[FormsFile]:
    """The bundled forms files, then any found under XDELTA_FIXTURES_DIR."""
    paths = sorted(p for p in fixtures_dir.iterdir() if p.is_file() and not p.suffix)
    extra = extra_fixtures_dir()
    if extra is not None and extra.is_dir():
        paths += sorted(p for p in extra.iterdir() if p.is_file() and p.suffix in ("", ".forms"))
    loaded = [load(p) for p in paths]
    logger.debug("loaded %d fixtures", len(loaded))
    return loaded


# ── Quadric files ────────────────────────────────────────────────────────────

def _quadric_vector(line_no: int, source: str, genus: int) -> tuple[Fraction, ...]:
    symbols = sympy.symbols(f"x1:{genus + 1}")
    names = {str(s): s for s in symbols}
    try:
        expr = parse_expr(source, local_dict=names, transformations=standard_transformations + (convert_xor,))
        poly = sympy.Poly(expr, *symbols)
    except (SyntaxError, TokenError, TypeError, ValueError, sympy.PolynomialError, sympy.SympifyError) as exc:
        raise MalformedLineError(line_no, f"cannot read quadric {source!r}: {exc}") from None
    if not poly.is_homogeneous or poly.total_degree() != 2:
        raise MalformedLineError(line_no, f"{source!r} is not a homogeneous quadric in x1..x{genus}")

    index = {m: k for k, m in enumerate(monomials(genus, 2))}
    vector = [Fraction(0)] * len(index)
    for exponents, coeff in poly.terms():
        monomial = tuple(i for i, e in enumerate(exponents) for _ in range(e))
        if not coeff.is_Rational:
            raise MalformedLineError(line_no, f"coefficient {coeff} is not rational")
        vector[index[monomial]] = Fraction(int(coeff.p), int(coeff.q))
    return tuple(vector)


def parse_quadrics(text: str) -> QuadricsFile:
    records, provenance = _records(text)
    headers, pos = _read_headers(records, _QUADRIC_HEADERS)
    level, delta, declared = _subgroup(headers)
    quadrics = []
    for line_no, key, fields in records[pos:]:
        if key in _QUADRIC_HEADERS:
            raise DuplicateHeaderError(line_no, key)
        if key != "quadric":
            raise MalformedLineError(line_no, f"unknown record '{key}'")
        quadrics.append(_quadric_vector(line_no, " ".join(fields), declared))
    if not quadrics:
        raise EmptyFormsError("the file declares no quadrics")
    return QuadricsFile(level, delta.residues, declared, tuple(quadrics), tuple(provenance))


def load_quadrics(path: str | Path) -> QuadricsFile:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"quadrics file not found: {path}")
    return parse_quadrics(path.read_text(encoding="utf-8"))
