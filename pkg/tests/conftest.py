import numpy as np
import pytest

from featgrid import FeatureRecord, InteractionMatrix, build_table


def table_from(importances, names=None, type_tag="num"):
    """FeatureTable from raw scores; names default to f0, f1, ..."""
    if names is None:
        names = [f"f{k}" for k in range(len(importances))]
    return build_table(
        FeatureRecord(name, type_tag, float(value))
        for name, value in zip(names, importances)
    )


def matrix_from(rows):
    return InteractionMatrix(np.asarray(rows, dtype=float))


@pytest.fixture
def three_feature_instance():
    """The hand-derived instance: I = [3, 2, 1], only f0 and f2 interact."""
    table = table_from([3.0, 2.0, 1.0])
    g = np.zeros((3, 3))
    g[0, 2] = g[2, 0] = 1.0
    return table, InteractionMatrix(g)
