"""Dataset representation, boosting weight distribution and splitting.

Labels are stored as small integers: ``0`` is the majority (negative) class
and ``1`` the minority (positive) class.
"""

import enum
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    EmptyDatasetError,
    NonFiniteValueError,
    SingleClassError,
    SingleClassWarning,
    TooFewSamplesError,
)

WEIGHT_TOL = 1e-9


class ClassLabel(enum.IntEnum):
    MAJORITY = 0
    MINORITY = 1


MAJORITY = ClassLabel.MAJORITY
MINORITY = ClassLabel.MINORITY


def _frozen(a):
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Dataset:
    """Feature matrix with binary class labels.

    Parameters
    ----------
    features : ndarray of shape (m, n)
        Real-valued features, used as-is (no internal scaling).
    labels : ndarray of shape (m,)
        ``ClassLabel`` values; minority is the positive class.
    feature_names : tuple of str, optional
        Column names carried through from ingestion.

    Build instances with :func:`make_dataset`, which validates the inputs.
    Both arrays are read-only.
    """

    features: np.ndarray
    labels: np.ndarray
    feature_names: Optional[tuple] = field(default=None)

    @property
    def m(self) -> int:
        return self.features.shape[0]

    @property
    def n(self) -> int:
        return self.features.shape[1]

    def __len__(self):
        return self.m

    @property
    def minority_mask(self) -> np.ndarray:
        return self.labels == MINORITY

    @property
    def minority_indices(self) -> np.ndarray:
        return np.flatnonzero(self.labels == MINORITY)

    @property
    def majority_indices(self) -> np.ndarray:
        return np.flatnonzero(self.labels == MAJORITY)

    @property
    def minority_features(self) -> np.ndarray:
        return self.features[self.labels == MINORITY]

    @property
    def has_both_classes(self) -> bool:
        return bool(np.any(self.labels == MINORITY) and np.any(self.labels == MAJORITY))

    def subset(self, indices) -> "Dataset":
        indices = np.asarray(indices, dtype=np.intp)
        return Dataset(_frozen(self.features[indices]), _frozen(self.labels[indices]),
                       self.feature_names)

    def with_features(self, features) -> "Dataset":
        """Same labels, new (validated) feature matrix of identical shape."""
        features = np.asarray(features, dtype=np.float64)
        if features.shape != self.features.shape:
            raise DimensionMismatchError(
                f"expected shape {self.features.shape}, got {features.shape}")
        _check_finite(features)
        return Dataset(_frozen(features), self.labels, self.feature_names)

    def append_minority(self, synthetic) -> "Dataset":
        """Return this dataset followed by ``synthetic`` rows labelled minority."""
        synthetic = np.asarray(synthetic, dtype=np.float64)
        if synthetic.size == 0:
            return self
        if synthetic.ndim != 2 or synthetic.shape[1] != self.n:
            raise DimensionMismatchError(
                f"synthetic rows need {self.n} features, got shape {synthetic.shape}")
        _check_finite(synthetic)
        features = np.vstack([self.features, synthetic])
        labels = np.concatenate([self.labels,
                                 np.full(synthetic.shape[0], MINORITY, dtype=np.int8)])
        return Dataset(_frozen(features), _frozen(labels), self.feature_names)


def _check_finite(features):
    if not np.all(np.isfinite(features)):
        bad = np.argwhere(~np.isfinite(features))[0]
        raise NonFiniteValueError(
            f"non-finite feature value at row {bad[0]}, column {bad[1]}")


def make_dataset(features, labels, feature_names: Optional[Sequence[str]] = None) -> Dataset:
    """Validate and wrap a feature matrix and label vector.

    A dataset with a single class is returned (a bare tree can be fit on
    it) but a :class:`SingleClassWarning` is issued.
    """
    features = np.asarray(features, dtype=np.float64)
    if features.ndim == 1:
        features = features.reshape(-1, 1)
    if features.ndim != 2:
        raise DimensionMismatchError("features must be a 2-d matrix")
    labels = np.asarray(labels)
    if labels.ndim != 1:
        raise DimensionMismatchError("labels must be a vector")
    if features.shape[0] != labels.shape[0]:
        raise DimensionMismatchError(
            f"{features.shape[0]} feature rows but {labels.shape[0]} labels")
    if features.shape[0] > 0 and features.shape[1] < 1:
        raise DimensionMismatchError("at least one feature column is required")
    if labels.size and not np.all(np.isin(labels, (MAJORITY, MINORITY))):
        raise ValueError("labels must be ClassLabel values (0=majority, 1=minority)")
    _check_finite(features)
    if feature_names is not None:
        feature_names = tuple(str(name) for name in feature_names)
        if len(feature_names) != features.shape[1]:
            raise DimensionMismatchError("feature_names length differs from column count")

    labels = labels.astype(np.int8)
    if labels.size and len(np.unique(labels)) == 1:
        warnings.warn("dataset contains a single class", SingleClassWarning, stacklevel=2)
    return Dataset(_frozen(features), _frozen(labels), feature_names)


def class_counts(ds: Dataset):
    """Return ``(n_majority, n_minority)``."""
    n_min = int(np.count_nonzero(ds.labels == MINORITY))
    return ds.m - n_min, n_min


def imbalance_ratio(ds: Dataset) -> float:
    n_maj, n_min = class_counts(ds)
    if n_min == 0:
        raise SingleClassError("imbalance ratio undefined without minority samples")
    return n_maj / n_min


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.5
    seed: int = 0
    stratified: bool = True

    def __post_init__(self):
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError("train_fraction must lie strictly between 0 and 1")


def _n_train(count, fraction):
    # round half up; keeps at least one sample on each side
    return min(max(int(np.floor(fraction * count + 0.5)), 1), count - 1)


def split_indices(labels, spec: SplitSpec):
    """Index version of :func:`stratified_split`; both index arrays sorted."""
    labels = np.asarray(labels)
    rng = np.random.default_rng(spec.seed)
    if spec.stratified:
        groups = [np.flatnonzero(labels == c) for c in (MAJORITY, MINORITY)]
        groups = [g for g in groups if g.size]
    else:
        groups = [np.arange(labels.size)]
    train, test = [], []
    for g in groups:
        if g.size < 2:
            raise TooFewSamplesError(f"a class with {g.size} sample(s) cannot be split")
        perm = rng.permutation(g)
        k = _n_train(g.size, spec.train_fraction)
        train.append(perm[:k])
        test.append(perm[k:])
    return np.sort(np.concatenate(train)), np.sort(np.concatenate(test))


def stratified_split(ds: Dataset, spec: SplitSpec):
    """Partition ``ds`` into ``(train, test)``.

    With ``spec.stratified`` each class is split separately, so per-class
    train fractions are within one sample of ``spec.train_fraction``.
    Row order within each side follows the original dataset.
    """
    train_idx, test_idx = split_indices(ds.labels, spec)
    return ds.subset(train_idx), ds.subset(test_idx)


@dataclass(frozen=True, eq=False)
class WeightDistribution:
    """Boosting mass over the (single) mislabel pair of each sample."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 1:
            raise DimensionMismatchError("weights must be a vector")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        if w.size and abs(w.sum() - 1.0) > WEIGHT_TOL:
            raise ValueError(f"weights sum to {w.sum()!r}, expected 1")
        object.__setattr__(self, "weights", _frozen(w))

    def __len__(self):
        return self.weights.size

    @classmethod
    def normalized(cls, raw) -> "WeightDistribution":
        raw = np.asarray(raw, dtype=np.float64)
        return cls(raw / raw.sum())


def init_uniform(m: int) -> WeightDistribution:
    if m < 1:
        raise EmptyDatasetError("cannot build a distribution over zero samples")
    return WeightDistribution(np.full(m, 1.0 / m))
