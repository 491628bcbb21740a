"""Weighted CART weak learner with Laplace-smoothed leaf scores.

Sample weights are rescaled so the positive-weight samples carry a total
mass equal to their count. Uniform weights therefore behave like plain
counts, and the leaf smoothing constant is measured in samples.
Zero-weight samples are dropped before fitting and never influence the tree.
"""

from dataclasses import dataclass

import numpy as np

from .data import MAJORITY, MINORITY, ClassLabel, Dataset
from .exceptions import AllZeroWeightsError, DimensionMismatchError, EmptyDatasetError

LEAF = -1


@dataclass(frozen=True)
class TreeConfig:
    max_depth: int = 8
    min_samples_leaf: int = 1
    impurity: str = "gini"
    leaf_smoothing: float = 1.0

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.min_samples_leaf < 1:
            raise ValueError("min_samples_leaf must be >= 1")
        if self.impurity != "gini":
            raise ValueError("only gini impurity is supported")
        if self.leaf_smoothing < 0:
            raise ValueError("leaf_smoothing must be >= 0")


class DecisionTree:
    """A fitted binary tree stored as parallel node arrays.

    Internal node ``i`` sends ``x`` to ``left[i]`` when
    ``x[feature[i]] <= threshold[i]`` and to ``right[i]`` otherwise. Leaves
    have ``feature == -1`` and carry ``scores[i] = (p_majority, p_minority)``.
    """

    def __init__(self, feature, threshold, left, right, scores, depth, n_features):
        self.feature = np.asarray(feature, dtype=np.intp)
        self.threshold = np.asarray(threshold, dtype=np.float64)
        self.left = np.asarray(left, dtype=np.intp)
        self.right = np.asarray(right, dtype=np.intp)
        self.scores = np.asarray(scores, dtype=np.float64).reshape(-1, 2)
        self.depth = int(depth)
        self.n_features = int(n_features)
        for a in (self.feature, self.threshold, self.left, self.right, self.scores):
            a.setflags(write=False)

    @property
    def node_count(self):
        return self.feature.shape[0]

    @property
    def leaf_count(self):
        return int(np.count_nonzero(self.feature == LEAF))

    def apply(self, X) -> np.ndarray:
        """Leaf index reached by every row of ``X``."""
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != self.n_features:
            raise DimensionMismatchError(
                f"tree was fit on {self.n_features} features, got {X.shape[1]}")
        node = np.zeros(X.shape[0], dtype=np.intp)
        rows = np.arange(X.shape[0])
        for _ in range(self.depth):
            f = self.feature[node]
            internal = f != LEAF
            if not internal.any():
                break
            go_left = X[rows, np.where(internal, f, 0)] <= self.threshold[node]
            node = np.where(internal, np.where(go_left, self.left[node], self.right[node]), node)
        return node

    def predict_scores(self, X) -> np.ndarray:
        """Array of shape (q, 2): majority and minority scores per row."""
        return self.scores[self.apply(X)]

    def minority_score(self, X) -> np.ndarray:
        return self.predict_scores(X)[:, 1]

    def predict(self, X) -> np.ndarray:
        s = self.predict_scores(X)
        # exact ties go to the majority class
        return (s[:, 1] > s[:, 0]).astype(np.int8)

    def to_text(self) -> str:
        """Line-oriented dump: ``node_id feature threshold left right p_maj p_min``.

        Leaves print ``-1`` for feature/left/right and ``nan`` for threshold.
        """
        lines = ["# node feature threshold left right p_majority p_minority"]
        for i in range(self.node_count):
            if self.feature[i] == LEAF:
                lines.append(f"{i} -1 nan -1 -1 {self.scores[i, 0]!r} {self.scores[i, 1]!r}")
            else:
                lines.append(f"{i} {self.feature[i]} {self.threshold[i]!r} "
                             f"{self.left[i]} {self.right[i]} nan nan")
        return "\n".join(lines) + "\n"


def _best_split(Xs, w, wmin, min_leaf):
    """Best (gain, feature, threshold) over all features, or None.

    Gain is the weighted Gini decrease. ``argmax`` on the (feature, position)
    layout returns the first maximum, i.e. the lowest feature index and then
    the lowest threshold.
    """
    s, n = Xs.shape
    order = np.argsort(Xs, axis=0, kind="stable")
    V = np.take_along_axis(Xs, order, axis=0)
    cw = np.cumsum(w[order], axis=0)[:-1]
    ca = np.cumsum(wmin[order], axis=0)[:-1]
    W = w.sum()
    A = wmin.sum()
    wl, al = cw, ca
    wr, ar = W - cw, A - ca
    with np.errstate(divide="ignore", invalid="ignore"):
        child = 2.0 * al * (wl - al) / wl + 2.0 * ar * (wr - ar) / wr
    gain = 2.0 * A * (W - A) / W - child
    pos = np.arange(1, s)[:, None]
    valid = (V[:-1] < V[1:]) & (pos >= min_leaf) & (s - pos >= min_leaf)
    valid &= np.isfinite(gain)
    if not valid.any():
        return None
    gain = np.where(valid, gain, -np.inf)
    flat = np.argmax(gain.T)
    f, j = divmod(int(flat), s - 1)
    lo, hi = V[j, f], V[j + 1, f]
    thr = lo + (hi - lo) / 2.0
    if not lo <= thr < hi:
        thr = lo
    return gain[j, f], f, thr


def fit_tree(ds: Dataset, sample_weights=None, cfg: TreeConfig = TreeConfig()) -> DecisionTree:
    """Fit a depth-capped weighted CART tree.

    Parameters
    ----------
    ds : Dataset
    sample_weights : array-like of shape (m,), optional
        Non-negative weights; uniform when omitted.
    cfg : TreeConfig

    Returns
    -------
    DecisionTree
    """
    if ds.m == 0:
        raise EmptyDatasetError("cannot fit a tree on an empty dataset")
    w = np.ones(ds.m) if sample_weights is None else np.asarray(sample_weights, dtype=np.float64)
    if w.shape != (ds.m,):
        raise DimensionMismatchError(f"{w.shape[0]} weights for {ds.m} samples")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ValueError("sample weights must be finite and non-negative")
    keep = w > 0
    if not keep.any():
        raise AllZeroWeightsError("all sample weights are zero")
    X = ds.features[keep]
    y = ds.labels[keep] == MINORITY
    w = w[keep]
    w = w * (w.shape[0] / w.sum())
    wmin = np.where(y, w, 0.0)
    alpha = cfg.leaf_smoothing

    feature, threshold, left, right, scores = [], [], [], [], []
    max_depth_seen = 0

    def new_node():
        feature.append(LEAF)
        threshold.append(np.nan)
        left.append(LEAF)
        right.append(LEAF)
        scores.append((np.nan, np.nan))
        return len(feature) - 1

    root = new_node()
    stack = [(root, np.arange(X.shape[0]), 0)]
    while stack:
        node, idx, depth = stack.pop()
        max_depth_seen = max(max_depth_seen, depth)
        W = w[idx].sum()
        A = wmin[idx].sum()
        n_min = np.count_nonzero(y[idx])
        pure = n_min == 0 or n_min == idx.size
        split = None
        if depth < cfg.max_depth and not pure and idx.size >= 2 * cfg.min_samples_leaf:
            split = _best_split(X[idx], w[idx], wmin[idx], cfg.min_samples_leaf)
        if split is None:
            denom = W + 2.0 * alpha
            scores[node] = ((W - A + alpha) / denom, (A + alpha) / denom)
            continue
        _, f, thr = split
        goes_left = X[idx, f] <= thr
        feature[node] = f
        threshold[node] = thr
        left[node] = new_node()
        right[node] = new_node()
        # right pushed first so the left subtree gets lower node ids
        stack.append((right[node], idx[~goes_left], depth + 1))
        stack.append((left[node], idx[goes_left], depth + 1))

    return DecisionTree(feature, threshold, left, right, scores, max_depth_seen, ds.n)


def predict_scores(tree: DecisionTree, x):
    """``(score_majority, score_minority)`` for one feature vector."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise DimensionMismatchError("expected a single feature vector")
    s = tree.predict_scores(x.reshape(1, -1))[0]
    return float(s[0]), float(s[1])


def predict_label(tree: DecisionTree, x) -> ClassLabel:
    s_maj, s_min = predict_scores(tree, x)
    return MINORITY if s_min > s_maj else MAJORITY
