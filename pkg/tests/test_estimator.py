import numpy as np
import pytest
from sklearn.base import clone

from featgrid import (
    GridLayoutEstimator,
    InteractionMatrix,
    ValidationError,
    ValueMatrix,
    compute_layout,
    pearson_interaction,
)

from conftest import table_from


def make_data(seed=0, rows=40, cols=6):
    rng = np.random.RandomState(seed)
    return rng.randn(rows, cols)


class TestEstimatorApi:
    def test_get_set_params_roundtrip(self):
        est = GridLayoutEstimator(w_center=0.1, passes=2)
        params = est.get_params()
        assert params["w_center"] == 0.1
        assert params["passes"] == 2
        est.set_params(window_size=5)
        assert est.window_size == 5

    def test_clone(self):
        est = GridLayoutEstimator(interaction="none", radius=9)
        cloned = clone(est)
        assert cloned.get_params() == est.get_params()

    def test_fit_sets_attributes(self):
        est = GridLayoutEstimator().fit(make_data())
        assert est.positions_.shape == (6, 2)
        assert est.ranks_.shape == (6,)
        assert est.n_features_in_ == 6
        assert est.loss_ == est.loss_terms_.total
        assert len({tuple(p) for p in est.positions_}) == 6

    def test_fit_transform_matches_positions(self):
        data = make_data(1)
        est = GridLayoutEstimator()
        positions = est.fit_transform(data)
        assert np.array_equal(positions, est.positions_)

    def test_positions_follow_input_order(self):
        data = make_data(2, cols=4)
        importance = [1.0, 4.0, 2.0, 3.0]
        est = GridLayoutEstimator(interaction="none").fit(data, importance=importance)
        # the most important input column sits at the origin
        assert tuple(est.positions_[1]) == (0, 0)
        assert est.ranks_.tolist() == [4, 1, 3, 2]

    def test_default_importance_keeps_input_order(self):
        est = GridLayoutEstimator(interaction="none").fit(make_data(3, cols=3))
        assert est.ranks_.tolist() == [1, 2, 3]

    def test_feature_names_from_argument(self):
        est = GridLayoutEstimator(interaction="none").fit(
            make_data(4, cols=2), feature_names=["left", "right"]
        )
        assert list(est.feature_names_in_) == ["left", "right"]
        assert est.table_.index_by_name.keys() == {"left", "right"}

    def test_precomputed_matches_manual_pipeline(self):
        data = make_data(5, cols=5)
        importance = [5.0, 4.0, 3.0, 2.0, 1.0]
        est = GridLayoutEstimator().fit(data, importance=importance)

        table = table_from(importance)
        interactions = pearson_interaction(ValueMatrix(table.names, data))
        result = compute_layout(table, interactions)
        assert np.array_equal(est.positions_, result.layout.coords)

        pre = GridLayoutEstimator(interaction="precomputed").fit(
            interactions.values, importance=importance
        )
        assert np.array_equal(pre.positions_, est.positions_)

    def test_precomputed_requires_square(self):
        with pytest.raises(ValidationError):
            GridLayoutEstimator(interaction="precomputed").fit(make_data(6, rows=10, cols=4))

    def test_bad_interaction_mode(self):
        with pytest.raises(ValidationError):
            GridLayoutEstimator(interaction="voodoo").fit(make_data())

    def test_importance_shape_checked(self):
        with pytest.raises(ValidationError):
            GridLayoutEstimator().fit(make_data(), importance=[1.0, 2.0])

    def test_deterministic(self):
        data = make_data(7)
        a = GridLayoutEstimator().fit(data).positions_
        b = GridLayoutEstimator().fit(data).positions_
        assert np.array_equal(a, b)

    def test_dataframe_columns_become_names(self):
        pd = pytest.importorskip("pandas")
        frame = pd.DataFrame(make_data(8, cols=3), columns=["alpha", "beta", "gamma"])
        est = GridLayoutEstimator(interaction="none").fit(frame)
        assert list(est.feature_names_in_) == ["alpha", "beta", "gamma"]
        assert est.table_.names == ("alpha", "beta", "gamma")
