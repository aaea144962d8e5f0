"""Core domain types: feature records, importance ordering, saturation scaling.

A feature table is the spine of every pipeline stage: records sorted by
descending importance, where the list index is the 0-based selection index
(displayed 1-based inside grid squares).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .exceptions import ValidationError


class GridPos(NamedTuple):
    """Integer grid cell; y grows downward in rendered output."""

    x: int
    y: int


@dataclass(frozen=True)
class Weights:
    """Regularizer weights: w1 pulls important features toward the grid center,
    w2 keeps consecutive ranks near each other. Both are kept small so pairwise
    interactions dominate the placement."""

    w1: float = 0.05
    w2: float = 0.02

    def __post_init__(self) -> None:
        for name in ("w1", "w2"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValidationError(f"{name} must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class FeatureRecord:
    """One ML feature: identity, type tag, importance score, pop-up stats."""

    name: str
    type_tag: str
    importance: float
    stats: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("feature name must be non-empty")
        if not math.isfinite(self.importance) or self.importance < 0:
            raise ValidationError(
                f"feature {self.name!r}: importance must be finite and >= 0, "
                f"got {self.importance!r}"
            )


@dataclass(frozen=True)
class FeatureTable:
    """Features in selection order: importance non-increasing, names unique."""

    features: tuple[FeatureRecord, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for rec in self.features:
            if rec.name in seen:
                raise ValidationError(f"duplicate feature name {rec.name!r}")
            seen.add(rec.name)
        values = [rec.importance for rec in self.features]
        if any(a < b for a, b in zip(values, values[1:])):
            raise ValidationError("features must be sorted by non-increasing importance")

    def __len__(self) -> int:
        return len(self.features)

    def __iter__(self) -> Iterator[FeatureRecord]:
        return iter(self.features)

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(rec.name for rec in self.features)

    @cached_property
    def index_by_name(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def importance(self) -> np.ndarray:
        arr = np.array([rec.importance for rec in self.features], dtype=float)
        arr.setflags(write=False)
        return arr


def build_table(records: Iterable[FeatureRecord]) -> FeatureTable:
    """Sort records by descending importance; equal scores keep input order."""
    ordered = sorted(records, key=lambda rec: rec.importance, reverse=True)
    return FeatureTable(tuple(ordered))


def normalize_importance(table: FeatureTable) -> list[int]:
    """Map importance scores linearly onto integer saturations in [0, 255].

    The maximum maps to 255 and the minimum to 0; when all scores are equal,
    every feature gets 255 so a uniform table renders at full color.
    """
    if len(table) == 0:
        raise ValidationError("cannot normalize an empty feature table")
    imp = table.importance
    hi = float(imp[0])
    lo = float(imp[-1])
    if hi == lo:
        return [255] * len(table)
    span = hi - lo
    return [round_half_away(255.0 * (float(v) - lo) / span) for v in imp]


def round_half_away(x: float) -> int:
    """Round with halves away from zero, for cross-platform determinism."""
    return math.floor(x + 0.5) if x >= 0 else math.ceil(x - 0.5)
