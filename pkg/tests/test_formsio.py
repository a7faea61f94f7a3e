import shutil
from fractions import Fraction

import pytest

from src.formsio import (
    DuplicateHeaderError,
    EmptyFormsError,
    GenusMismatchError,
    MalformedLineError,
    NonCuspFormError,
    fixtures,
    load,
    parse,
    parse_quadrics,
    serialize,
)

from .conftest import FIXTURES

HEADER_21 = "level 21\ndelta 1 8 13 20\ngenus 3\nprecision 4\n"
FORMS_21 = "form 0 1 -1 1 -1\nform 0 1 0 -1 -2\nform 0 0 2 -1 -2\n"


def test_fixture_21_parses(forms21):
    assert forms21.level == 21
    assert forms21.delta == (1, 8, 13, 20)
    assert forms21.genus == 3 and forms21.precision == 10
    assert forms21.forms[0][:4] == (0, 1, -1, 1)
    assert forms21.provenance[0].startswith("X_Delta(21)")
    assert forms21.subgroup.label == "{±1,±8}"


def test_fixture_text_is_canonical():
    text = (FIXTURES / "30-d1").read_text(encoding="utf-8")
    assert serialize(parse(text)) == text


def test_rational_coefficients_are_accepted():
    text = HEADER_21 + "form 0 1/2 -1 1 -1\nform 0 1 0 -1 -2\nform 0 0 2 -1 -2\n"
    assert parse(text).forms[0][1] == Fraction(1, 2)
    assert "form 0 1/2 -1 1 -1" in serialize(parse(text))


@pytest.mark.parametrize("text, error, line_no", [
    ("level 21\ngenus 3\nprecision 4\n" + FORMS_21, MalformedLineError, 2),
    ("level 21\nlevel 21\ndelta 1 8 13 20\ngenus 3\nprecision 4\n" + FORMS_21, DuplicateHeaderError, 2),
    (HEADER_21 + "form 0 1 -1 1\nform 0 1 0 -1 -2\nform 0 0 2 -1 -2\n", MalformedLineError, 5),
    (HEADER_21 + "form 0 1 x 1 -1\nform 0 1 0 -1 -2\nform 0 0 2 -1 -2\n", MalformedLineError, 5),
    (HEADER_21 + "form 1 1 -1 1 -1\nform 0 1 0 -1 -2\nform 0 0 2 -1 -2\n", NonCuspFormError, 5),
    (HEADER_21 + FORMS_21 + "genus 3\n", DuplicateHeaderError, 8),
    (HEADER_21 + "series 0 1 -1 1 -1\n", MalformedLineError, 5),
    ("level 21\ndelta 1 8\ngenus 3\nprecision 4\n" + FORMS_21, MalformedLineError, 2),
    ("level 21\ndelta 1 3\ngenus 3\nprecision 4\n" + FORMS_21, MalformedLineError, 2),
])
def test_malformed_files_report_the_line(text, error, line_no):
    with pytest.raises(error) as info:
        parse(text)
    assert info.value.line_no == line_no


def test_genus_mismatches():
    with pytest.raises(GenusMismatchError, match="declared genus 4"):
        parse(HEADER_21.replace("genus 3", "genus 4") + FORMS_21 + "form 0 0 0 0 1\n")
    with pytest.raises(GenusMismatchError, match="2 form lines"):
        parse(HEADER_21 + "form 0 1 -1 1 -1\nform 0 1 0 -1 -2\n")


def test_empty_forms_file():
    with pytest.raises(EmptyFormsError):
        parse(HEADER_21)


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load(tmp_path / "nope")


def test_bundled_and_extra_fixtures(tmp_path, monkeypatch):
    levels = [f.level for f in fixtures()]
    assert levels == [21, 30]
    shutil.copy(FIXTURES / "21-d1", tmp_path / "copy.forms")
    monkeypatch.setenv("XDELTA_FIXTURES_DIR", str(tmp_path))
    assert [f.level for f in fixtures()] == [21, 30, 21]


def test_quadric_file(quadrics32):
    assert quadrics32.level == 32 and quadrics32.genus == 5
    assert len(quadrics32.quadrics) == 3
    assert all(len(q) == 15 for q in quadrics32.quadrics)
    # x4^2 - x5^2 + x2*x5 + x3*x4 + 2*x4*x5 over x1^2, x1x2, ..., x5^2
    assert quadrics32.quadrics[2] == (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 2, -1)


@pytest.mark.parametrize("line", ["x1^3", "x1 + x2", "x1*x2 +", "sqrt(2)*x1^2", "x6^2"])
def test_bad_quadrics_are_rejected(line):
    text = f"level 32\ndelta 1 15 17 31\ngenus 5\nquadric {line}\n"
    with pytest.raises(MalformedLineError) as info:
        parse_quadrics(text)
    assert info.value.line_no == 4


@pytest.mark.parametrize("text, line_no", [
    (HEADER_21 + FORMS_21.rstrip("\n"), 7),
    (HEADER_21.replace("genus 3", "genus  3") + FORMS_21, 3),
    (HEADER_21.replace("level 21", "level\t21") + FORMS_21, 1),
    (HEADER_21 + "form 0 1 -1 1 -1 \n" + FORMS_21.split("\n", 1)[1], 5),
])
def test_records_use_single_spaces_and_a_final_newline(text, line_no):
    with pytest.raises(MalformedLineError) as info:
        parse(text)
    assert info.value.line_no == line_no


def test_comments_are_free_form():
    text = "#  made by\thand  \n" + HEADER_21 + FORMS_21
    assert parse(text).provenance == ("made by\thand",)
