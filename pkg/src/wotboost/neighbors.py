"""Exact Euclidean k-nearest-neighbor search.

Brute force over the whole pool. Distance ties are broken by ascending pool
index, and the batched path computes distances with the same arithmetic as
the single-query path so both agree bit for bit.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .data import Dataset
from .exceptions import DimensionMismatchError, NotEnoughNeighborsError

_CHUNK_ELEMENTS = 4_000_000


@dataclass(frozen=True, eq=False)
class NeighborResult:
    indices: np.ndarray
    distances: np.ndarray


def _pool_features(pool):
    if isinstance(pool, Dataset):
        return pool.features
    pool = np.asarray(pool, dtype=np.float64)
    return pool.reshape(-1, 1) if pool.ndim == 1 else pool


def _row_sq_norm(diff):
    # shared by single and batched paths so tie-breaking matches exactly
    return (diff * diff).sum(axis=-1)


def _sq_dist(query, pool):
    return _row_sq_norm(pool - query)


def k_nearest(query, pool, k: int, exclude_self: bool = False,
              self_index: Optional[int] = None) -> NeighborResult:
    """Return the ``k`` pool points closest to ``query``.

    Parameters
    ----------
    query : array-like of shape (n,)
    pool : Dataset or array-like of shape (m, n)
    k : int
    exclude_self : bool
        Drop ``self_index`` from the candidates. Duplicated points at
        distance zero remain legitimate neighbors.
    self_index : int, optional
        Pool index of the query; required when ``exclude_self`` is set.
    """
    X = _pool_features(pool)
    q = np.asarray(query, dtype=np.float64).ravel()
    if q.shape[0] != X.shape[1]:
        raise DimensionMismatchError("query dimensionality differs from pool")
    if k < 1:
        raise ValueError("k must be at least 1")
    if exclude_self and self_index is None:
        raise ValueError("exclude_self requires self_index")

    d2 = _sq_dist(q, X)
    eligible = X.shape[0] - (1 if exclude_self else 0)
    if eligible < k:
        raise NotEnoughNeighborsError(f"{eligible} eligible pool points, k={k}")
    if exclude_self:
        d2[self_index] = np.inf
    order = np.argsort(d2, kind="stable")[:k]
    return NeighborResult(order, np.sqrt(d2[order]))


def neighbor_table(queries, pool, k: int, exclude_self: bool = False) -> np.ndarray:
    """Indices of the ``k`` nearest pool points for every query row.

    With ``exclude_self`` the queries must *be* the pool, and row ``i``
    excludes pool index ``i``. Returns an int array of shape (q, k).
    """
    Q = _pool_features(queries)
    X = _pool_features(pool)
    if Q.shape[1] != X.shape[1]:
        raise DimensionMismatchError("query dimensionality differs from pool")
    if exclude_self and Q.shape[0] != X.shape[0]:
        raise ValueError("exclude_self requires queries to be the pool itself")
    eligible = X.shape[0] - (1 if exclude_self else 0)
    if k < 1:
        raise ValueError("k must be at least 1")
    if eligible < k:
        raise NotEnoughNeighborsError(f"{eligible} eligible pool points, k={k}")

    out = np.empty((Q.shape[0], k), dtype=np.intp)
    step = max(1, _CHUNK_ELEMENTS // max(1, X.shape[0] * X.shape[1]))
    for start in range(0, Q.shape[0], step):
        block = Q[start:start + step]
        d2 = _row_sq_norm(X[None, :, :] - block[:, None, :])
        if exclude_self:
            rows = np.arange(block.shape[0])
            d2[rows, start + rows] = np.inf
        out[start:start + step] = np.argsort(d2, axis=1, kind="stable")[:, :k]
    return out


def neighbor_class_count(query_index: int, ds: Dataset, k: int, counted_class) -> int:
    """How many of the ``k`` nearest neighbors of sample ``query_index``
    (over the whole dataset, self excluded) carry ``counted_class``."""
    res = k_nearest(ds.features[query_index], ds, k, exclude_self=True,
                    self_index=query_index)
    return int(np.count_nonzero(ds.labels[res.indices] == int(counted_class)))


def neighbor_class_counts(ds: Dataset, k: int, counted_class, indices=None) -> np.ndarray:
    """Vectorized :func:`neighbor_class_count` for many query indices."""
    if indices is None:
        indices = np.arange(ds.m)
    indices = np.asarray(indices, dtype=np.intp)
    if ds.m - 1 < k:
        raise NotEnoughNeighborsError(f"{ds.m - 1} eligible pool points, k={k}")
    out = np.empty(indices.size, dtype=np.int64)
    X = ds.features
    step = max(1, _CHUNK_ELEMENTS // max(1, X.shape[0] * X.shape[1]))
    for start in range(0, indices.size, step):
        idx = indices[start:start + step]
        d2 = _row_sq_norm(X[None, :, :] - X[idx][:, None, :])
        d2[np.arange(idx.size), idx] = np.inf
        nn = np.argsort(d2, axis=1, kind="stable")[:, :k]
        out[start:start + step] = np.count_nonzero(ds.labels[nn] == int(counted_class), axis=1)
    return out
