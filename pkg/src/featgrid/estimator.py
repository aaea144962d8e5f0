"""Scikit-learn style facade over the layout pipeline.

Columns of X are the items being embedded: fit computes one integer grid
cell per feature, exposed in input column order so the estimator composes
with pandas / sklearn tooling.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .exceptions import ValidationError
from .interaction import ValueMatrix, load_interaction, pearson_interaction, zero_interaction
from .layout import LayoutConfig, compute_layout
from .model import FeatureRecord, Weights, build_table


class GridLayoutEstimator(BaseEstimator):
    """Embed the features (columns) of a data matrix on a 2D integer grid.

    Parameters
    ----------
    interaction : {"pearson", "precomputed", "none"}
        "pearson" derives pairwise |Pearson r| from the columns of X;
        "precomputed" expects X to be the square interaction matrix itself;
        "none" places features by importance alone.
    negatives : {"absolute", "clip"}
        How Pearson handles negative correlations.
    w_center, w_seq : float
        Regularizer weights (center pull, rank-sequence pull).
    radius : int or None
        Candidate box radius override; None picks the smallest box with
        4x head room.
    passes, window_size : int
        Refinement passes and permutation window size.

    Attributes
    ----------
    positions_ : ndarray of shape (n_features, 2)
        Grid cell per input column.
    ranks_ : ndarray of shape (n_features,)
        1-based selection rank per input column.
    loss_ : float
        Final placement loss.
    """

    def __init__(
        self,
        interaction="pearson",
        negatives="absolute",
        w_center=0.05,
        w_seq=0.02,
        radius=None,
        passes=3,
        window_size=4,
    ):
        self.interaction = interaction
        self.negatives = negatives
        self.w_center = w_center
        self.w_seq = w_seq
        self.radius = radius
        self.passes = passes
        self.window_size = window_size

    def fit(self, X, y=None, importance=None, feature_names=None):
        """Compute the layout for the features of X.

        importance defaults to all ones (rank order = column order);
        feature_names default to DataFrame columns or "f0".."f{n-1}".
        """
        columns = getattr(X, "columns", None)
        X = np.asarray(X, dtype=float)
        if X.ndim != 2:
            raise ValidationError(f"X must be 2-dimensional, got shape {X.shape}")
        n = X.shape[1]
        if feature_names is not None:
            names = [str(name) for name in feature_names]
        elif columns is not None:
            names = [str(name) for name in columns]
        else:
            names = [f"f{k}" for k in range(n)]
        if len(names) != n:
            raise ValidationError(f"got {len(names)} feature names for {n} columns")
        if importance is None:
            scores = np.ones(n)
        else:
            scores = np.asarray(importance, dtype=float)
            if scores.shape != (n,):
                raise ValidationError(
                    f"importance must have shape ({n},), got {scores.shape}"
                )
        table = build_table(
            FeatureRecord(name, "feature", float(score))
            for name, score in zip(names, scores)
        )
        input_index = {name: k for k, name in enumerate(names)}
        rank_to_input = [input_index[name] for name in table.names]

        if self.interaction == "pearson":
            aligned = X[:, rank_to_input]
            interactions = pearson_interaction(
                ValueMatrix(table.names, aligned), negatives=self.negatives
            )
        elif self.interaction == "precomputed":
            if X.shape[0] != n:
                raise ValidationError(
                    f"precomputed interaction must be square, got shape {X.shape}"
                )
            interactions = load_interaction(X[np.ix_(rank_to_input, rank_to_input)], n)
        elif self.interaction == "none":
            interactions = zero_interaction(n)
        else:
            raise ValidationError(
                f"interaction must be 'pearson', 'precomputed' or 'none', "
                f"got {self.interaction!r}"
            )

        config = LayoutConfig(
            weights=Weights(self.w_center, self.w_seq),
            candidate_radius_override=self.radius,
            postprocess_passes=self.passes,
            window_size=self.window_size,
        )
        result = compute_layout(table, interactions, config)

        positions = np.empty((n, 2), dtype=np.int64)
        ranks = np.empty(n, dtype=np.int64)
        for rank, input_pos in enumerate(rank_to_input):
            positions[input_pos] = result.layout.coords[rank]
            ranks[input_pos] = rank + 1
        positions.setflags(write=False)
        ranks.setflags(write=False)

        self.table_ = table
        self.interaction_ = interactions
        self.layout_ = result.layout
        self.positions_ = positions
        self.ranks_ = ranks
        self.loss_ = result.terms.total
        self.loss_terms_ = result.terms
        self.passes_run_ = result.passes_run
        self.n_features_in_ = n
        self.feature_names_in_ = np.asarray(names, dtype=object)
        return self

    def fit_transform(self, X, y=None, **fit_params):
        """Fit and return grid positions, one (x, y) row per input column."""
        return self.fit(X, y, **fit_params).positions_
