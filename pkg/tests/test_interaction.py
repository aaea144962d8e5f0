import random

import numpy as np
import pytest

from featgrid import (
    CooccurrenceCounts,
    InteractionMatrix,
    ValidationError,
    ValueMatrix,
    cooccurrence_interaction,
    load_interaction,
    pearson_interaction,
    zero_interaction,
)

from oracles import pearson_two_pass


def values(*columns):
    names = tuple(f"c{k}" for k in range(len(columns)))
    return ValueMatrix(names, np.array(columns, dtype=float).T)


def check_matrix_invariants(m: InteractionMatrix):
    v = m.values
    assert np.array_equal(v, v.T)
    assert np.all(v >= 0)
    assert np.all(np.diagonal(v) == 0)
    assert np.all(np.isfinite(v))


class TestPearson:
    def test_perfect_positive_correlation(self):
        g = pearson_interaction(values([1, 2, 3], [2, 4, 6]))
        assert g.values[0, 1] == 1.0
        check_matrix_invariants(g)

    def test_perfect_anticorrelation_absolute(self):
        g = pearson_interaction(values([1, 2, 3], [3, 2, 1]))
        assert g.values[0, 1] == 1.0

    def test_orthogonal_columns(self):
        g = pearson_interaction(values([1, -1, 1, -1], [1, 1, -1, -1]))
        assert g.values[0, 1] == 0.0

    def test_zero_variance_column(self):
        g = pearson_interaction(values([5, 5, 5], [1, 2, 3]))
        assert g.values[0, 1] == 0.0

    def test_clip_mode_drops_anticorrelation(self):
        g = pearson_interaction(values([1, 2, 3], [3, 2, 1]), negatives="clip")
        assert g.values[0, 1] == 0.0
        g = pearson_interaction(values([1, 2, 3], [2, 4, 6]), negatives="clip")
        assert g.values[0, 1] == 1.0

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValidationError):
            pearson_interaction(values([1, 2], [3, 4]), negatives="wrap")

    def test_single_row_rejected(self):
        with pytest.raises(ValidationError):
            ValueMatrix(("a", "b"), np.array([[1.0, 2.0]]))

    def test_non_finite_cell_rejected(self):
        with pytest.raises(ValidationError):
            ValueMatrix(("a", "b"), np.array([[1.0, 2.0], [np.nan, 3.0]]))

    def test_matches_two_pass_oracle(self):
        rng = random.Random(23)
        for _ in range(20):
            rows, cols = rng.randint(2, 40), rng.randint(2, 8)
            data = [[rng.gauss(0, 3) for _ in range(cols)] for _ in range(rows)]
            vm = ValueMatrix(tuple(f"c{k}" for k in range(cols)), np.array(data))
            g = pearson_interaction(vm)
            check_matrix_invariants(g)
            for i in range(cols):
                for j in range(i):
                    expected = pearson_two_pass(
                        [row[i] for row in data], [row[j] for row in data]
                    )
                    assert abs(g.values[i, j] - expected) < 1e-12

    def test_affine_and_negation_invariance(self):
        rng = random.Random(29)
        data = np.array([[rng.gauss(0, 1) for _ in range(4)] for _ in range(25)])
        base = pearson_interaction(ValueMatrix(("a", "b", "c", "d"), data))
        shifted = data * np.array([2.0, 3.5, 0.25, 10.0]) + np.array([1.0, -4.0, 0.0, 7.0])
        flipped = data * np.array([1.0, -1.0, 1.0, -1.0])
        g_shifted = pearson_interaction(ValueMatrix(("a", "b", "c", "d"), shifted))
        g_flipped = pearson_interaction(ValueMatrix(("a", "b", "c", "d"), flipped))
        assert np.allclose(base.values, g_shifted.values, atol=1e-12)
        assert np.allclose(base.values, g_flipped.values, atol=1e-12)


class TestCooccurrence:
    def counts(self, c, pairs):
        n = len(c)
        pair = np.zeros((n, n), dtype=np.int64)
        for (i, j), count in pairs.items():
            pair[i, j] = pair[j, i] = count
        return CooccurrenceCounts(np.array(c, dtype=np.int64), pair)

    def test_always_together(self):
        g = cooccurrence_interaction(self.counts([5, 5], {(0, 1): 5}))
        assert g.values[0, 1] == 1.0

    def test_never_together(self):
        g = cooccurrence_interaction(self.counts([5, 7], {}))
        assert g.values[0, 1] == 0.0

    def test_cosine_normalization(self):
        g = cooccurrence_interaction(self.counts([4, 16], {(0, 1): 2}))
        assert g.values[0, 1] == 0.25

    def test_zero_usage_gives_zero(self):
        g = cooccurrence_interaction(self.counts([0, 5], {}))
        assert g.values[0, 1] == 0.0

    def test_pair_exceeding_usage_rejected(self):
        with pytest.raises(ValidationError):
            self.counts([2, 5], {(0, 1): 3})

    def test_asymmetric_pairs_rejected(self):
        pair = np.array([[0, 2], [1, 0]], dtype=np.int64)
        with pytest.raises(ValidationError):
            CooccurrenceCounts(np.array([5, 5]), pair)

    def test_output_in_unit_interval(self):
        rng = random.Random(31)
        for _ in range(30):
            n = rng.randint(2, 12)
            c = [rng.randint(0, 20) for _ in range(n)]
            pairs = {}
            for i in range(n):
                for j in range(i):
                    cap = min(c[i], c[j])
                    if cap and rng.random() < 0.6:
                        pairs[(i, j)] = rng.randint(0, cap)
            g = cooccurrence_interaction(self.counts(c, pairs))
            check_matrix_invariants(g)
            assert np.all(g.values <= 1.0)


class TestLoadInteraction:
    def test_valid_matrix_accepted_verbatim(self):
        g = load_interaction([[0.0, 0.3], [0.3, 0.0]], 2)
        assert g.values[0, 1] == 0.3
        check_matrix_invariants(g)

    def test_asymmetry_averaged_with_warning(self):
        with pytest.warns(UserWarning, match="asymmetric"):
            g = load_interaction([[0.0, 0.3], [0.2, 0.0]])
        assert g.values[0, 1] == 0.25
        assert g.values[1, 0] == 0.25

    def test_negative_entry_rejected(self):
        with pytest.raises(ValidationError, match="row 0, column 1"):
            load_interaction([[0.0, -0.1], [-0.1, 0.0]])

    def test_non_finite_entry_rejected(self):
        with pytest.raises(ValidationError, match="row 1, column 0"):
            load_interaction([[0.0, 0.1], [np.inf, 0.0]])

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValidationError, match="3 features"):
            load_interaction([[0.0, 0.1], [0.1, 0.0]], 3)

    def test_nonsquare_rejected(self):
        with pytest.raises(ValidationError):
            load_interaction([[0.0, 0.1]])

    def test_diagonal_zeroed(self):
        g = load_interaction([[0.5, 0.1], [0.1, 0.5]])
        assert np.all(np.diagonal(g.values) == 0)

    def test_feature_cap_enforced(self):
        with pytest.raises(ValidationError, match="5000"):
            zero_interaction(5001)


def test_zero_interaction():
    g = zero_interaction(4)
    assert g.n == 4
    assert np.all(g.values == 0)
    check_matrix_invariants(g)
