import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wotboost import (
    MAJORITY,
    MINORITY,
    SplitSpec,
    WeightDistribution,
    class_counts,
    fit_tree,
    imbalance_ratio,
    init_uniform,
    make_dataset,
    stratified_split,
)
from wotboost.data import split_indices
from wotboost.exceptions import (
    DimensionMismatchError,
    EmptyDatasetError,
    NonFiniteValueError,
    SingleClassWarning,
)


def test_make_dataset_basics():
    ds = make_dataset([[0.0, 1.0], [1.0, 2.0], [2.0, 3.0]], [0, 1, 0])
    assert (ds.m, ds.n) == (3, 2)
    assert list(ds.minority_indices) == [1]
    assert class_counts(ds) == (2, 1)
    assert imbalance_ratio(ds) == 2.0
    with pytest.raises(ValueError):
        ds.features[0, 0] = 5.0


def test_make_dataset_rejects_bad_input():
    with pytest.raises(DimensionMismatchError):
        make_dataset([[0.0], [1.0]], [0])
    with pytest.raises(NonFiniteValueError):
        make_dataset([[np.nan], [1.0]], [0, 1])
    empty = make_dataset(np.empty((0, 2)), [])
    assert empty.m == 0
    with pytest.raises(EmptyDatasetError):
        fit_tree(empty)
    with pytest.warns(SingleClassWarning):
        make_dataset([[0.0], [1.0]], [0, 0])


def test_append_minority():
    ds = make_dataset([[0.0], [1.0]], [0, 1])
    out = ds.append_minority([[0.5], [0.7]])
    assert out.m == 4 and list(out.labels) == [0, 1, 1, 1]
    with pytest.raises(DimensionMismatchError):
        ds.append_minority([[0.5, 1.0]])


def test_pima_split_sizes(pima):
    train, test = stratified_split(pima, SplitSpec(0.5, seed=0))
    assert train.m == 384 and test.m == 384
    assert class_counts(train)[1] == 134 and class_counts(test)[1] == 134


def test_split_keeps_both_classes_on_tiny_data():
    ds = make_dataset([[0.0], [1.0], [2.0], [3.0]], [0, 0, 1, 1])
    train, test = stratified_split(ds, SplitSpec(0.5, seed=3))
    assert class_counts(train) == (1, 1) and class_counts(test) == (1, 1)


def test_split_is_deterministic(pima):
    a = split_indices(pima.labels, SplitSpec(0.5, seed=9))
    b = split_indices(pima.labels, SplitSpec(0.5, seed=9))
    c = split_indices(pima.labels, SplitSpec(0.5, seed=10))
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    assert not np.array_equal(a[0], c[0])


@settings(max_examples=60, deadline=None)
@given(n_maj=st.integers(2, 40), n_min=st.integers(2, 40), seed=st.integers(0, 10**6),
       frac=st.floats(0.2, 0.8), stratified=st.booleans())
def test_split_partitions(n_maj, n_min, seed, frac, stratified):
    labels = np.r_[np.zeros(n_maj, dtype=int), np.ones(n_min, dtype=int)]
    tr, te = split_indices(labels, SplitSpec(frac, seed, stratified))
    assert sorted(np.r_[tr, te].tolist()) == list(range(n_maj + n_min))
    if stratified:
        assert 1 <= labels[tr].sum() < n_min
        assert 1 <= (labels[tr] == 0).sum() < n_maj


def test_weights():
    d = init_uniform(4)
    assert np.allclose(d.weights, 0.25)
    with pytest.raises(ValueError):
        WeightDistribution(np.array([0.5, 0.6]))
    assert np.allclose(WeightDistribution.normalized([1, 3]).weights, [0.25, 0.75])


def test_labels():
    assert int(MAJORITY) == 0 and int(MINORITY) == 1
