"""File ingestion: feature tables, interaction inputs, highlight subsets.

CSV is parsed with the stdlib reader (RFC 4180 quoting); JSON variants are
accepted where noted. Validation errors carry file and line context.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .exceptions import ValidationError
from .interaction import (
    CooccurrenceCounts,
    InteractionMatrix,
    ValueMatrix,
    load_interaction,
)
from .model import FeatureRecord, FeatureTable, build_table
from .overlay import FeatureSubset

REQUIRED_COLUMNS = ("name", "type", "importance")


def _read_csv_rows(path: Path) -> list[list[str]]:
    with path.open(newline="", encoding="utf-8") as handle:
        return [row for row in csv.reader(handle) if row and any(cell.strip() for cell in row)]


def parse_features(path) -> FeatureTable:
    """Load a feature table from CSV (name,type,importance[,stats...]) or JSON.

    Extra CSV columns are carried along as pop-up stats in column order.
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        records = _features_from_json(path)
    else:
        records = _features_from_csv(path)
    if not records:
        raise ValidationError(f"{path}: no feature rows found")
    try:
        return build_table(records)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def _features_from_csv(path: Path) -> list[FeatureRecord]:
    rows = _read_csv_rows(path)
    if not rows:
        raise ValidationError(f"{path}: empty file")
    header = [cell.strip() for cell in rows[0]]
    if tuple(h.lower() for h in header[:3]) != REQUIRED_COLUMNS:
        raise ValidationError(
            f"{path}:1: header must start with 'name,type,importance', got {','.join(header)!r}"
        )
    stat_keys = header[3:]
    records = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ValidationError(
                f"{path}:{line}: expected {len(header)} fields, got {len(row)}"
            )
        name, type_tag, raw_importance = row[0].strip(), row[1].strip(), row[2].strip()
        try:
            importance = float(raw_importance)
        except ValueError:
            raise ValidationError(
                f"{path}:{line}: importance {raw_importance!r} is not a number"
            ) from None
        stats = tuple((key, row[3 + k].strip()) for k, key in enumerate(stat_keys))
        try:
            records.append(FeatureRecord(name, type_tag, importance, stats))
        except ValidationError as exc:
            raise ValidationError(f"{path}:{line}: {exc}") from None
    return records


def _features_from_json(path: Path) -> list[FeatureRecord]:
    with path.open(encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, list):
        raise ValidationError(f"{path}: expected a JSON array of feature records")
    records = []
    for k, item in enumerate(data):
        if not isinstance(item, dict):
            raise ValidationError(f"{path}: record {k} is not an object")
        missing = [key for key in ("name", "type", "importance") if key not in item]
        if missing:
            raise ValidationError(f"{path}: record {k} is missing {', '.join(missing)}")
        raw_stats = item.get("stats", {})
        if not isinstance(raw_stats, dict):
            raise ValidationError(f"{path}: record {k} stats must be an object")
        stats = tuple((str(key), str(value)) for key, value in raw_stats.items())
        try:
            importance = float(item["importance"])
            records.append(
                FeatureRecord(str(item["name"]), str(item["type"]), importance, stats)
            )
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"{path}: record {k}: {exc}") from None
    return records


def _check_name_cover(path: Path, given: list[str], table: FeatureTable, what: str) -> None:
    given_set = set(given)
    if len(given_set) != len(given):
        dup = next(name for name in given if given.count(name) > 1)
        raise ValidationError(f"{path}: duplicate {what} {dup!r}")
    table_set = set(table.names)
    missing = sorted(table_set - given_set)
    extra = sorted(given_set - table_set)
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing features: {', '.join(missing)}")
        if extra:
            parts.append(f"unknown features: {', '.join(extra)}")
        raise ValidationError(f"{path}: {what}s do not match the feature table ({'; '.join(parts)})")


def read_value_matrix(path, table: FeatureTable) -> ValueMatrix:
    """Load an examples-by-features CSV and align columns to table rank order."""
    path = Path(path)
    rows = _read_csv_rows(path)
    if not rows:
        raise ValidationError(f"{path}: empty file")
    header = [cell.strip() for cell in rows[0]]
    _check_name_cover(path, header, table, "column name")
    data = np.empty((len(rows) - 1, len(header)))
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ValidationError(
                f"{path}:{line}: expected {len(header)} fields, got {len(row)}"
            )
        for k, cell in enumerate(row):
            try:
                data[line - 2, k] = float(cell)
            except ValueError:
                raise ValidationError(
                    f"{path}:{line}: value {cell!r} in column {header[k]!r} is not a number"
                ) from None
    order = [header.index(name) for name in table.names]
    try:
        return ValueMatrix(table.names, data[:, order])
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


_COOC_HEADER = ("name_a", "name_b", "count")


def read_cooccurrence(path, table: FeatureTable) -> CooccurrenceCounts:
    """Load a triplet CSV: pair rows `a,b,count` plus usage rows `a,a,count`."""
    path = Path(path)
    rows = _read_csv_rows(path)
    if rows and tuple(cell.strip().lower() for cell in rows[0]) == _COOC_HEADER:
        rows = rows[1:]
    if not rows:
        raise ValidationError(f"{path}: no co-occurrence rows found")
    index = table.index_by_name
    n = len(table)
    feature_counts = np.zeros(n, dtype=np.int64)
    pair_counts = np.zeros((n, n), dtype=np.int64)
    seen_features: set[int] = set()
    seen_pairs: set[tuple[int, int]] = set()
    for line, row in enumerate(rows, start=1):
        if len(row) != 3:
            raise ValidationError(f"{path}:{line}: expected 'name_a,name_b,count'")
        name_a, name_b, raw = (cell.strip() for cell in row)
        for name in (name_a, name_b):
            if name not in index:
                raise ValidationError(f"{path}:{line}: unknown feature {name!r}")
        try:
            count = int(raw)
        except ValueError:
            raise ValidationError(f"{path}:{line}: count {raw!r} is not an integer") from None
        if count < 0:
            raise ValidationError(f"{path}:{line}: count must be >= 0, got {count}")
        a, b = index[name_a], index[name_b]
        if a == b:
            if a in seen_features:
                raise ValidationError(f"{path}:{line}: duplicate usage count for {name_a!r}")
            seen_features.add(a)
            feature_counts[a] = count
        else:
            key = (min(a, b), max(a, b))
            if key in seen_pairs:
                raise ValidationError(
                    f"{path}:{line}: duplicate pair count for {name_a!r}, {name_b!r}"
                )
            seen_pairs.add(key)
            pair_counts[a, b] = count
            pair_counts[b, a] = count
    try:
        return CooccurrenceCounts(feature_counts, pair_counts)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def read_interaction_matrix(path, table: FeatureTable) -> InteractionMatrix:
    """Load a named square matrix CSV (header row and column of feature names)."""
    path = Path(path)
    rows = _read_csv_rows(path)
    if not rows:
        raise ValidationError(f"{path}: empty file")
    col_names = [cell.strip() for cell in rows[0][1:]]
    _check_name_cover(path, col_names, table, "column name")
    row_data: dict[str, list[float]] = {}
    row_names = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != len(col_names) + 1:
            raise ValidationError(
                f"{path}:{line}: expected {len(col_names) + 1} fields, got {len(row)}"
            )
        name = row[0].strip()
        values = []
        for k, cell in enumerate(row[1:]):
            try:
                values.append(float(cell))
            except ValueError:
                raise ValidationError(
                    f"{path}:{line}: value {cell!r} in column {col_names[k]!r} is not a number"
                ) from None
        row_names.append(name)
        row_data[name] = values
    _check_name_cover(path, row_names, table, "row name")
    col_index = {name: k for k, name in enumerate(col_names)}
    raw = np.empty((len(table), len(table)))
    for i, row_name in enumerate(table.names):
        values = row_data[row_name]
        for j, col_name in enumerate(table.names):
            raw[i, j] = values[col_index[col_name]]
    try:
        return load_interaction(raw, len(table))
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def read_subset(path, label: str | None = None) -> FeatureSubset:
    """Load a highlight subset: JSON ({label, features} or bare array) or
    a plain list of names (one per line / comma separated)."""
    path = Path(path)
    resolved_label = label or path.stem
    if path.suffix.lower() == ".json":
        with path.open(encoding="utf-8") as handle:
            data = json.load(handle)
        if isinstance(data, dict):
            names = data.get("features")
            if not isinstance(names, list):
                raise ValidationError(f"{path}: expected a 'features' array")
            resolved_label = str(data.get("label") or resolved_label)
        elif isinstance(data, list):
            names = data
        else:
            raise ValidationError(f"{path}: expected a JSON array or object")
        names = [str(name) for name in names]
    else:
        rows = _read_csv_rows(path)
        names = [cell.strip() for row in rows for cell in row if cell.strip()]
        if names and names[0].lower() == "name":
            names = names[1:]
    if not names:
        raise ValidationError(f"{path}: subset file contains no feature names")
    return FeatureSubset(resolved_label, frozenset(names))
