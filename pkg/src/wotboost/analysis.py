"""Minority difficulty profiling.

A minority sample is *safe* when at most one of its ``k`` nearest neighbors
(over all samples, itself excluded) belongs to the majority class, and
*unsafe* otherwise.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .data import MAJORITY, Dataset, class_counts, imbalance_ratio
from .exceptions import SingleClassError
from .neighbors import neighbor_class_counts


class Safety(enum.Enum):
    SAFE = "safe"
    UNSAFE = "unsafe"


@dataclass(frozen=True)
class DifficultyProfile:
    n_safe: int
    n_unsafe: int
    unsafe_pct: float
    imbalance_ratio: float
    m: int
    n: int
    n_majority: int
    n_minority: int
    normalized: bool = False


def minmax_scale(X, reference=None):
    """Scale columns of ``X`` to [0, 1] by the min/max of ``reference``.

    Constant reference columns map to 0.
    """
    X = np.asarray(X, dtype=np.float64)
    ref = X if reference is None else np.asarray(reference, dtype=np.float64)
    lo = ref.min(axis=0)
    span = ref.max(axis=0) - lo
    return (X - lo) / np.where(span > 0, span, 1.0)


def majority_neighbor_counts(ds: Dataset, k: int = 5, normalize: bool = False) -> np.ndarray:
    if normalize:
        ds = ds.with_features(minmax_scale(ds.features))
    return neighbor_class_counts(ds, k, MAJORITY, ds.minority_indices)


def classify_minority_safety(ds: Dataset, k: int = 5, normalize: bool = False):
    """Safety label for each minority sample, in ``ds.minority_indices`` order."""
    counts = majority_neighbor_counts(ds, k, normalize)
    return [Safety.SAFE if c <= 1 else Safety.UNSAFE for c in counts]


def profile(ds: Dataset, k: int = 5, normalize: bool = False) -> DifficultyProfile:
    """Characteristics row for one dataset: size, imbalance and unsafe share.

    Parameters
    ----------
    ds : Dataset
    k : int, default=5
    normalize : bool, default=False
        Min-max scale features before the neighbor search. Raw features are
        the default.
    """
    n_maj, n_min = class_counts(ds)
    if n_maj == 0 or n_min == 0:
        raise SingleClassError("profiling needs both classes")
    counts = majority_neighbor_counts(ds, k, normalize)
    n_unsafe = int(np.count_nonzero(counts > 1))
    n_safe = n_min - n_unsafe
    return DifficultyProfile(
        n_safe=n_safe,
        n_unsafe=n_unsafe,
        unsafe_pct=100.0 * n_unsafe / n_min,
        imbalance_ratio=imbalance_ratio(ds),
        m=ds.m,
        n=ds.n,
        n_majority=n_maj,
        n_minority=n_min,
        normalized=normalize,
    )
