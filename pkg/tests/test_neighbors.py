import numpy as np
import pytest

import oracles
from wotboost import k_nearest, make_dataset, neighbor_class_count
from wotboost.exceptions import DimensionMismatchError, NotEnoughNeighborsError
from wotboost.neighbors import neighbor_class_counts, neighbor_table


def test_hand_example():
    pool = [[0.0, 0.0], [1.0, 0.0], [0.0, 2.0], [3.0, 3.0]]
    r = k_nearest([0.0, 0.0], pool, 2, exclude_self=True, self_index=0)
    assert list(r.indices) == [1, 2]
    assert list(r.distances) == [1.0, 2.0]


def test_ties_go_to_lower_index():
    pool = [[1.0], [-1.0], [1.0], [0.0]]
    assert list(k_nearest([0.0], pool, 3).indices) == [3, 0, 1]


def test_duplicates_are_neighbors():
    pool = [[0.0], [0.0], [5.0]]
    r = k_nearest([0.0], pool, 1, exclude_self=True, self_index=0)
    assert list(r.indices) == [1] and r.distances[0] == 0.0


def test_matches_brute_force():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(50, 3))
    for i in range(50):
        r = k_nearest(X[i], X, 5, exclude_self=True, self_index=i)
        assert list(r.indices) == oracles.brute_knn(X[i].tolist(), X.tolist(), 5, skip=i)


def test_batched_matches_single():
    rng = np.random.default_rng(1)
    X = np.round(rng.normal(size=(80, 2)), 1)  # ties
    table = neighbor_table(X, X, 4, exclude_self=True)
    for i in range(80):
        r = k_nearest(X[i], X, 4, exclude_self=True, self_index=i)
        assert list(table[i]) == list(r.indices)


def test_permutation_invariance_of_distances():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(30, 2))
    perm = rng.permutation(30)
    a = k_nearest(X[0], X, 5).distances
    b = k_nearest(X[0], X[perm], 5).distances
    assert np.array_equal(a, b)


def test_errors():
    with pytest.raises(NotEnoughNeighborsError):
        k_nearest([0.0], [[0.0], [1.0]], 2, exclude_self=True, self_index=0)
    with pytest.raises(DimensionMismatchError):
        k_nearest([0.0, 1.0], [[0.0], [1.0]], 1)


def test_class_counts_agree():
    rng = np.random.default_rng(3)
    ds = make_dataset(rng.normal(size=(40, 2)), rng.integers(0, 2, 40))
    counts = neighbor_class_counts(ds, 5, 0)
    for i in range(ds.m):
        assert counts[i] == neighbor_class_count(i, ds, 5, 0)
        assert counts[i] == oracles.majority_among_knn(ds.features.tolist(), ds.labels.tolist(), i, 5)
