"""
Stage registry.

Stages are registered as *classes*; the singleton instance is created the
first time get_stage() or pipeline() asks for it.  Registration order is
pipeline order.

Adding a new stage:
    from .stages import MyStage
    register(MyStage)
"""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .base import ClassificationStage

_CLASSES: dict[str, type] = {}
_INSTANCES: dict[str, "ClassificationStage"] = {}


def register(cls: type) -> type:
    """Register a stage class.  May be used as a decorator."""
    _CLASSES[cls.name] = cls
    return cls


def get_stage(name: str) -> "ClassificationStage":
    """Return the (lazily created) singleton instance for the given stage name."""
    if name not in _CLASSES:
        available = list(_CLASSES.keys())
        raise KeyError(f"Unknown stage '{name}'. Available: {available}")
    if name not in _INSTANCES:
        _INSTANCES[name] = _CLASSES[name]()
    return _INSTANCES[name]


def available_stages() -> list[tuple[str, str]]:
    """[(display_name, name), ...] in pipeline order."""
    return [(cls.display_name, name) for name, cls in _CLASSES.items()]


def pipeline(names: list[str] | None = None) -> list["ClassificationStage"]:
    """Stage instances in registration order, optionally restricted to `names`."""
    selected = list(_CLASSES) if names is None else names
    return [get_stage(name) for name in selected]


# ── Register built-in stages ─────────────────────────────────────────────────

from .stages import (  # noqa: E402
    AbramovichStage,
    CanonicalIdealStage,
    CoveringStage,
    GenusRuleStage,
    PublishedVerdictStage,
)

register(GenusRuleStage)
register(AbramovichStage)
register(CoveringStage)
register(CanonicalIdealStage)
register(PublishedVerdictStage)
