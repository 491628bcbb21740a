"""Synthetic minority oversampling: SMOTE, ADASYN and weighted oversampling.

All three share one synthesis rule. For a parent minority point ``x`` a
neighbor ``x_nn`` is drawn uniformly from the parent's ``k`` nearest
*minority* neighbors and the synthetic point is ``x + lam * (x_nn - x)``
with ``lam ~ U[0, 1]``. They differ only in how many synthetics each
minority point parents.

``parent_indices`` and ``neighbor_indices`` in a :class:`SynthesisBatch`
index the minority rows in their original order (``ds.minority_indices``).
"""

from dataclasses import dataclass

import numpy as np

from .data import MAJORITY, Dataset, WeightDistribution, class_counts
from .exceptions import AllZeroWeightsError, LengthMismatchError, SingleClassError
from .neighbors import neighbor_class_counts, neighbor_table


def as_generator(rng):
    """A numpy Generator from a seed; anything with ``integers`` and
    ``random`` methods is passed through."""
    if hasattr(rng, "integers") and hasattr(rng, "random"):
        return rng
    return np.random.default_rng(rng)


@dataclass(frozen=True)
class AllocationPlan:
    counts: np.ndarray
    total: int


@dataclass(frozen=True, eq=False)
class SynthesisBatch:
    samples: np.ndarray
    parent_indices: np.ndarray
    neighbor_indices: np.ndarray
    lambdas: np.ndarray

    def __len__(self):
        return self.samples.shape[0]

    @classmethod
    def empty(cls, n_features):
        return cls(np.empty((0, n_features)), np.empty(0, dtype=np.intp),
                   np.empty(0, dtype=np.intp), np.empty(0))


def allocate_counts(weights, N: int) -> AllocationPlan:
    """Split ``N`` into integers proportional to ``weights``.

    Real targets ``N * w_i / sum(w)`` are rounded by the largest-remainder
    method (ties go to the lower index), so the counts sum to ``N`` exactly
    and each differs from its target by less than one.

    >>> allocate_counts([0.5, 0.3, 0.2], 7).counts
    array([4, 2, 1])
    """
    w = np.asarray(weights, dtype=np.float64)
    if N < 0:
        raise ValueError("N must be non-negative")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite and non-negative")
    total = w.sum()
    if w.size == 0 or total <= 0:
        raise AllZeroWeightsError("cannot allocate over all-zero weights")
    targets = N * (w / total)
    counts = np.floor(targets).astype(np.int64)
    leftover = int(N - counts.sum())
    if leftover > 0:
        order = np.argsort(-(targets - counts), kind="stable")
        counts[order[:leftover]] += 1
    elif leftover < 0:
        # floating error pushed a floor above N; trim smallest remainders
        order = np.argsort(targets - counts, kind="stable")
        order = order[counts[order] > 0]
        counts[order[:-leftover]] -= 1
    return AllocationPlan(counts, int(N))


def _minority_matrix(minority):
    if isinstance(minority, Dataset):
        return minority.minority_features
    X = np.asarray(minority, dtype=np.float64)
    return X.reshape(-1, 1) if X.ndim == 1 else X


def synthesize(minority_X, counts, k: int, rng) -> SynthesisBatch:
    """Interpolate ``counts[i]`` synthetics from each minority row ``i``."""
    rng = as_generator(rng)
    counts = np.asarray(counts, dtype=np.int64)
    if counts.shape[0] != minority_X.shape[0]:
        raise LengthMismatchError("one count per minority sample required")
    G = int(counts.sum())
    if G == 0:
        return SynthesisBatch.empty(minority_X.shape[1])
    nn = neighbor_table(minority_X, minority_X, k, exclude_self=True)
    parents = np.repeat(np.arange(minority_X.shape[0]), counts)
    neighbors = nn[parents, rng.integers(0, k, size=G)]
    lambdas = rng.random(G)
    base = minority_X[parents]
    samples = base + lambdas[:, None] * (minority_X[neighbors] - base)
    return SynthesisBatch(samples, parents, neighbors, lambdas)


def smote(minority, N: int, k: int = 5, rng=None) -> SynthesisBatch:
    """SMOTE with uniform allocation of ``N`` synthetics over the minority.

    Parameters
    ----------
    minority : Dataset or array-like of shape (m_min, n)
        A dataset (its minority rows are used) or the minority features.
    N : int
        Number of synthetic samples.
    k : int, default=5
        Minority neighbors considered per parent.
    rng : numpy Generator or seed
    """
    X = _minority_matrix(minority)
    if N == 0:
        return SynthesisBatch.empty(X.shape[1])
    plan = allocate_counts(np.ones(X.shape[0]), N)
    return synthesize(X, plan.counts, k, rng)


def adasyn_allocation(train: Dataset, k: int = 5, beta: float = 1.0) -> AllocationPlan:
    """Per-minority synthetic counts driven by local difficulty ``delta_i / k``."""
    if not 0.0 <= beta <= 1.0:
        raise ValueError("beta must lie in [0, 1]")
    n_maj, n_min = class_counts(train)
    if n_min == 0 or n_maj == 0:
        raise SingleClassError("ADASYN needs both classes")
    G = int(np.floor(beta * (n_maj - n_min) + 0.5))
    if G <= 0:
        return AllocationPlan(np.zeros(n_min, dtype=np.int64), 0)
    delta = neighbor_class_counts(train, k, MAJORITY, train.minority_indices)
    ratios = delta / k
    if ratios.sum() == 0:
        ratios = np.ones(n_min)
    return allocate_counts(ratios / ratios.sum(), G)


def adasyn(train: Dataset, k: int = 5, beta: float = 1.0, rng=None) -> SynthesisBatch:
    """ADASYN: more synthetics for minority points with majority-heavy
    neighborhoods. ``beta=1`` balances the classes exactly; an already
    balanced input yields an empty batch."""
    plan = adasyn_allocation(train, k, beta)
    if plan.total == 0:
        return SynthesisBatch.empty(train.n)
    return synthesize(train.minority_features, plan.counts, k, rng)


def weighted_synthesis(train: Dataset, d, N: int, k: int = 5, rng=None) -> SynthesisBatch:
    """Synthesize ``N`` minority points in proportion to their boosting mass."""
    w = d.weights if isinstance(d, WeightDistribution) else np.asarray(d, dtype=np.float64)
    if w.shape[0] != train.m:
        raise LengthMismatchError(f"{w.shape[0]} weights for {train.m} samples")
    if N == 0:
        return SynthesisBatch.empty(train.n)
    plan = allocate_counts(w[train.minority_indices], N)
    return synthesize(train.minority_features, plan.counts, k, rng)


def weighted_oversample(train: Dataset, d, N: int, k: int = 5, rng=None) -> Dataset:
    """Temporary training set: ``train`` rows followed by ``N`` weighted synthetics."""
    batch = weighted_synthesis(train, d, N, k, rng)
    return train.append_minority(batch.samples)
