"""
Run configuration and level-ceiling resolution.
"""
from __future__ import annotations

import argparse
import os
from dataclasses import dataclass
from typing import Literal

DEFAULT_LEVEL_CEILING = 10_000
CEILING_ENV = "XDELTA_LEVEL_CEILING"

Mode = Literal["certify", "probe"]
OutputFormat = Literal["md", "csv", "plain"]


def resolve_level_ceiling(ceiling: int | str | None = "auto") -> int:
    """Resolve 'auto' to the environment override or the default; pass through explicit values."""
    if ceiling is None or ceiling == "auto":
        raw = os.environ.get(CEILING_ENV, "").strip()
        if not raw:
            return DEFAULT_LEVEL_CEILING
        ceiling = raw
    try:
        value = int(ceiling)
    except (TypeError, ValueError):
        raise ValueError(f"level ceiling must be a positive integer, got {ceiling!r}") from None
    if value < 1:
        raise ValueError(f"level ceiling must be a positive integer, got {value}")
    return value


@dataclass
class RunConfig:
    """One CLI invocation, after argument parsing."""
    command: str
    level: int | None = None
    delta_spec: str | None = None      # generators or residues, e.g. "8" or "1,8,13,20"
    forms_path: str | None = None
    quadrics_path: str | None = None
    table_id: int | None = None
    degree: int = 2
    mode: Mode = "probe"
    output_format: OutputFormat = "plain"
    ceiling: int = DEFAULT_LEVEL_CEILING

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            level=getattr(args, "level", None),
            delta_spec=getattr(args, "delta", None),
            forms_path=getattr(args, "forms", None),
            quadrics_path=getattr(args, "quadrics", None),
            table_id=getattr(args, "table_id", None),
            degree=getattr(args, "degree", 2),
            mode=getattr(args, "mode", "probe"),
            output_format=getattr(args, "format", "plain"),
            ceiling=resolve_level_ceiling(getattr(args, "ceiling", "auto")),
        )
