"""Pairwise interaction matrices: Pearson correlation, co-occurrence, direct load.

Every constructor funnels into the same validated shape: a dense symmetric
non-negative float64 matrix with a zero diagonal.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import ValidationError

# Dense storage cap; a 5000x5000 float64 matrix is ~200 MB.
MAX_FEATURES = 5000

_ASYMMETRY_WARN = 1e-9


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class InteractionMatrix:
    """Symmetric non-negative pairwise interaction strengths, zero diagonal."""

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValidationError(f"interaction matrix must be square, got shape {values.shape}")
        n = values.shape[0]
        if n > MAX_FEATURES:
            raise ValidationError(
                f"dense interaction matrices are capped at {MAX_FEATURES} features, got {n}"
            )
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            i, j = bad[0]
            raise ValidationError(f"non-finite interaction at row {i}, column {j}")
        neg = np.argwhere(values < 0)
        if neg.size:
            i, j = neg[0]
            raise ValidationError(f"negative interaction at row {i}, column {j}")
        if not np.array_equal(values, values.T):
            raise ValidationError("interaction matrix must be symmetric")
        if np.any(np.diagonal(values) != 0):
            raise ValidationError("interaction matrix diagonal must be zero")
        object.__setattr__(self, "values", _readonly(values))

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class ValueMatrix:
    """Example-by-feature observation matrix used for Pearson interactions."""

    column_names: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise ValidationError("value matrix must be 2-dimensional")
        if values.shape[0] < 2:
            raise ValidationError(
                f"Pearson correlation needs at least 2 rows, got {values.shape[0]}"
            )
        if values.shape[1] != len(self.column_names):
            raise ValidationError(
                f"value matrix has {values.shape[1]} columns but "
                f"{len(self.column_names)} column names"
            )
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            i, j = bad[0]
            raise ValidationError(
                f"non-finite value at row {i}, column {self.column_names[j]!r}"
            )
        object.__setattr__(self, "values", _readonly(values))


@dataclass(frozen=True)
class CooccurrenceCounts:
    """Per-feature usage counts and pairwise co-usage counts across ML tasks."""

    feature_counts: np.ndarray
    pair_counts: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.feature_counts, dtype=np.int64)
        pair = np.asarray(self.pair_counts, dtype=np.int64)
        if c.ndim != 1:
            raise ValidationError("feature_counts must be 1-dimensional")
        n = c.shape[0]
        if pair.shape != (n, n):
            raise ValidationError(
                f"pair_counts must be {n}x{n} to match feature_counts, got {pair.shape}"
            )
        if np.any(c < 0) or np.any(pair < 0):
            raise ValidationError("co-occurrence counts must be non-negative")
        if not np.array_equal(pair, pair.T):
            raise ValidationError("pair_counts must be symmetric")
        limit = np.minimum.outer(c, c)
        off_diag = ~np.eye(n, dtype=bool)
        bad = np.argwhere((pair > limit) & off_diag)
        if bad.size:
            i, j = bad[0]
            raise ValidationError(
                f"pair count {pair[i, j]} exceeds min usage count "
                f"min({c[i]}, {c[j]}) for features {i}, {j}"
            )
        object.__setattr__(self, "feature_counts", _readonly(c))
        object.__setattr__(self, "pair_counts", _readonly(pair))

    @property
    def n(self) -> int:
        return self.feature_counts.shape[0]


def zero_interaction(n: int) -> InteractionMatrix:
    """All-zero interactions: layout falls back to the regularizers alone."""
    if n < 1:
        raise ValidationError("need at least one feature")
    return InteractionMatrix(np.zeros((n, n)))


def pearson_interaction(values: ValueMatrix, *, negatives: str = "absolute") -> InteractionMatrix:
    """Pairwise |Pearson r| between columns (zero-variance columns give 0).

    negatives="absolute" keeps anti-correlated (redundant) features adjacent;
    "clip" maps negative correlations to 0 instead.
    """
    if negatives not in ("absolute", "clip"):
        raise ValidationError(f"negatives must be 'absolute' or 'clip', got {negatives!r}")
    x = values.values
    centered = x - x.mean(axis=0)
    ss = np.einsum("ij,ij->j", centered, centered)
    cov = centered.T @ centered
    denom = np.sqrt(np.outer(ss, ss))
    r = np.divide(cov, denom, out=np.zeros_like(cov), where=denom > 0)
    g = np.abs(r) if negatives == "absolute" else np.maximum(r, 0.0)
    # mirror the upper triangle so symmetry holds bitwise
    g = np.triu(g, 1)
    return InteractionMatrix(g + g.T)


def cooccurrence_interaction(counts: CooccurrenceCounts) -> InteractionMatrix:
    """Cosine-normalized co-usage: c_ij / sqrt(c_i * c_j), in [0, 1]."""
    c = counts.feature_counts.astype(float)
    denom = np.sqrt(np.outer(c, c))
    g = np.divide(
        counts.pair_counts.astype(float), denom, out=np.zeros((counts.n, counts.n)),
        where=denom > 0,
    )
    g = np.triu(g, 1)
    return InteractionMatrix(g + g.T)


def load_interaction(matrix, n_features: int | None = None) -> InteractionMatrix:
    """Validate a user-supplied square matrix as an InteractionMatrix.

    Mild asymmetry is repaired by averaging (M + M^T) / 2, with a warning
    when the largest discrepancy exceeds 1e-9; the diagonal is zeroed.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"interaction matrix must be square, got shape {m.shape}")
    if n_features is not None and m.shape[0] != n_features:
        raise ValidationError(
            f"interaction matrix is {m.shape[0]}x{m.shape[1]} but the table "
            f"has {n_features} features"
        )
    bad = np.argwhere(~np.isfinite(m))
    if bad.size:
        i, j = bad[0]
        raise ValidationError(f"non-finite interaction at row {i}, column {j}")
    neg = np.argwhere(m < 0)
    if neg.size:
        i, j = neg[0]
        raise ValidationError(f"negative interaction at row {i}, column {j}")
    asymmetry = float(np.abs(m - m.T).max()) if m.size else 0.0
    if asymmetry > _ASYMMETRY_WARN:
        warnings.warn(
            f"interaction matrix asymmetric (max |M - M^T| = {asymmetry:.3g}); "
            "averaging (M + M^T) / 2",
            stacklevel=2,
        )
    m = (m + m.T) / 2.0
    np.fill_diagonal(m, 0.0)
    return InteractionMatrix(m)
