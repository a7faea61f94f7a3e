#!/usr/bin/env python3
"""
xdelta: genus and gonality of intermediate modular curves X_Delta(N)

Usage:
    python xdelta.py genus 21 --delta 8
    python xdelta.py enumerate 29
    python xdelta.py classify 21 --delta 8 --forms fixtures/21-d1
    python xdelta.py tables 1 --format csv
    python xdelta.py relations fixtures/30-d1 --degree 2
    python xdelta.py petri --quadrics fixtures/32-d1.quadrics
    python xdelta.py fixtures

Options:
    --delta          Generators or residues of Delta ("8", "1,8,13,20");
                     omitted means {±1}, the subgroup of X_1(N)
    --forms          Cusp-form basis file for classify
    --quadrics       Quadric file for petri (instead of a forms file)
    --degree         2 or 3                     (relations; default: 2)
    --mode           certify or probe           (default: probe)
    --format         plain, md or csv           (default: plain; tables: md)
    --ceiling        Largest accepted level     (default: auto = $XDELTA_LEVEL_CEILING or 10000)
    -v, --verbose    Debug logging on stderr

Exit status: 0 ok, 1 usage error, 2 data error, 3 table mismatch.
"""

import argparse
import os
import sys

_REPO_ROOT = os.path.dirname(os.path.abspath(__file__))
if _REPO_ROOT not in sys.path:
    sys.path.insert(0, _REPO_ROOT)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xdelta",
        description="Genus and gonality of intermediate modular curves X_Delta(N)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--ceiling", default="auto", metavar="N")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, default="plain"):
        p.add_argument("--format", choices=("plain", "md", "csv"), default=default)
        return p

    def with_mode(p):
        p.add_argument("--mode", choices=("certify", "probe"), default="probe")
        return p

    p = with_format(sub.add_parser("genus", help="mu, nu2, nu3, nu_inf, genus and cusp orbits"))
    p.add_argument("level", type=int)
    p.add_argument("--delta", default=None)

    p = with_format(sub.add_parser("enumerate", help="every Delta at one level with its invariants"))
    p.add_argument("level", type=int)

    p = with_mode(with_format(sub.add_parser("classify", help="sub-hyperelliptic / hyperelliptic / trigonal")))
    p.add_argument("level", type=int)
    p.add_argument("--delta", default=None)
    p.add_argument("--forms", default=None, metavar="FILE")

    p = with_format(sub.add_parser("tables", help="recompute an embedded table and report mismatches"), "md")
    p.add_argument("table_id", type=int)

    p = with_mode(sub.add_parser("relations", help="degree-2 or degree-3 relations of a forms file"))
    p.add_argument("forms", metavar="FORMS")
    p.add_argument("--degree", type=int, choices=(2, 3), default=2)

    p = with_mode(sub.add_parser("petri", help="cubic generators of the canonical ideal (genus >= 5)"))
    p.add_argument("forms", nargs="?", default=None, metavar="FORMS")
    p.add_argument("--quadrics", default=None, metavar="FILE")

    with_format(sub.add_parser("fixtures", help="list the bundled forms files"))
    return parser


def _run(config) -> tuple[str, int]:
    from src import report

    if config.command == "genus":
        return report.genus_report(config.level, config.delta_spec, config.output_format, config.ceiling)
    if config.command == "enumerate":
        return report.enumerate_report(config.level, config.output_format, config.ceiling)
    if config.command == "classify":
        return report.classify_report(config.level, config.delta_spec, config.forms_path,
                                      config.mode, config.output_format, config.ceiling)
    if config.command == "tables":
        return report.tables_report(config.table_id, config.output_format)
    if config.command == "relations":
        return report.relations_report(config.forms_path, config.degree, config.mode)
    if config.command == "petri":
        return report.petri_report(config.forms_path, config.quadrics_path, config.mode)
    return report.fixtures_report(config.output_format)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; this CLI reserves 2 for data errors.
        return 0 if exc.code == 0 else 1

    from src.arith import ArithError, LevelMismatchError
    from src.canonical import CanonicalError
    from src.formsio import FormsFileError
    from src.gonality.tables import TableDataError
    from src.qlinalg import QLinAlgError
    from src.utils.config import RunConfig
    from src.utils.logs import setup_logging

    setup_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        text, status = _run(config)
    except (FileNotFoundError, FormsFileError, TableDataError, LevelMismatchError,
            CanonicalError, QLinAlgError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2
    except (ArithError, ValueError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"Error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 1

    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
