"""AdaBoost.M2-style boosting with per-round minority synthesis.

Each round builds a temporary training set (the original rows plus freshly
synthesized minority rows), fits a weighted tree on it, and scores the tree
on the original rows only. The pseudo-loss of those scores sets the round's
``beta`` and reweights the distribution for the next round.
``Synthesis.WEIGHTED`` allocates synthetics in proportion to the current
minority weights (WOTBoost), ``Synthesis.UNIFORM_SMOTE`` spreads them evenly
(SMOTEBoost) and ``Synthesis.NONE`` is plain boosting.
"""

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from .data import MAJORITY, MINORITY, ClassLabel, Dataset, WeightDistribution, class_counts, init_uniform
from .exceptions import (
    DegenerateNormalizerError,
    EmptyEnsembleError,
    LengthMismatchError,
    SingleClassError,
)
from .samplers import as_generator, smote, weighted_synthesis
from .tree import DecisionTree, TreeConfig, fit_tree


class Synthesis(enum.Enum):
    WEIGHTED = "weighted"
    UNIFORM_SMOTE = "uniform_smote"
    NONE = "none"


BALANCE = "balance"

# sum(d) is 1 only up to rounding; an uninformative tree must still read as 0.5
_HALF_TOL = 1e-12


@dataclass(frozen=True)
class BoostConfig:
    """Boosting hyperparameters.

    ``synth_per_round`` is either an int or ``"balance"``, meaning
    ``n_majority - n_minority`` of the training set. ``synthetic_weighting``
    chooses how the temporary set is weighted for the tree: ``"boost"`` gives
    original rows their boosting mass and lets the synthetics share the
    minority's total mass equally; ``"uniform"`` weights every row equally.
    """

    rounds: int = 10
    k: int = 5
    synth_per_round: Union[int, str] = BALANCE
    tree: TreeConfig = field(default_factory=TreeConfig)
    epsilon_floor: float = 1e-10
    synthetic_weighting: str = "boost"

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.synth_per_round != BALANCE and int(self.synth_per_round) < 0:
            raise ValueError("synth_per_round must be 'balance' or a non-negative int")
        if not 0.0 < self.epsilon_floor < 0.5:
            raise ValueError("epsilon_floor must lie in (0, 0.5)")
        if self.synthetic_weighting not in ("boost", "uniform"):
            raise ValueError("synthetic_weighting must be 'boost' or 'uniform'")


@dataclass(frozen=True)
class BoostedEnsemble:
    members: Tuple[Tuple[DecisionTree, float], ...]

    @property
    def rounds_completed(self) -> int:
        return len(self.members)

    @property
    def betas(self) -> np.ndarray:
        return np.array([b for _, b in self.members])

    def votes(self, X) -> np.ndarray:
        """Weighted votes ``sum_t log(1/beta_t) * h_t(x, c)``, shape (q, 2)."""
        if not self.members:
            raise EmptyEnsembleError("ensemble has no members")
        total = None
        for tree, beta in self.members:
            v = math.log(1.0 / beta) * tree.predict_scores(X)
            total = v if total is None else total + v
        return total

    def predict(self, X) -> np.ndarray:
        v = self.votes(X)
        return (v[:, 1] > v[:, 0]).astype(np.int8)

    def minority_score(self, X) -> np.ndarray:
        v = self.votes(X)
        return v[:, 1] / (v[:, 0] + v[:, 1])


@dataclass(frozen=True, eq=False)
class RoundInfo:
    """What happened in one boosting round; passed to ``on_round`` hooks."""

    t: int
    temporary: Dataset
    tree_weights: np.ndarray
    distribution: WeightDistribution
    epsilon: float
    beta: Optional[float]
    accepted: bool


def _pairs(scores):
    s = np.asarray(scores, dtype=np.float64)
    if s.ndim != 2 or s.shape[1] != 2:
        raise LengthMismatchError("scores must be (score_true, score_wrong) pairs")
    return s[:, 0], s[:, 1]


def _weights(d):
    return d.weights if isinstance(d, WeightDistribution) else np.asarray(d, dtype=np.float64)


def pseudo_loss(d, scores) -> float:
    """``0.5 * sum_i d_i * (1 - h(x_i, y_i) + h(x_i, wrong_i))``."""
    w = _weights(d)
    s_true, s_wrong = _pairs(scores)
    if s_true.shape[0] != w.shape[0]:
        raise LengthMismatchError(f"{s_true.shape[0]} score pairs for {w.shape[0]} weights")
    return float(0.5 * np.sum(w * (1.0 - s_true + s_wrong)))


def update_weights(d, beta: float, scores) -> WeightDistribution:
    """Multiply each weight by ``beta ** (0.5 * (1 - s_true + s_wrong))`` and renormalize."""
    if not 0.0 < beta < 1.0:
        raise ValueError("beta must lie in (0, 1)")
    w = _weights(d)
    s_true, s_wrong = _pairs(scores)
    if s_true.shape[0] != w.shape[0]:
        raise LengthMismatchError(f"{s_true.shape[0]} score pairs for {w.shape[0]} weights")
    raw = w * np.power(beta, 0.5 * (1.0 - s_true + s_wrong))
    z = raw.sum()
    if not z > 0:
        raise DegenerateNormalizerError("weight update produced zero total mass")
    return WeightDistribution(raw / z)


def true_wrong_scores(tree: DecisionTree, ds: Dataset) -> np.ndarray:
    """Per-sample ``(h(x, y_true), h(x, y_wrong))`` pairs."""
    s = tree.predict_scores(ds.features)
    y = ds.labels.astype(np.intp)
    rows = np.arange(ds.m)
    return np.column_stack([s[rows, y], s[rows, 1 - y]])


def synth_count(train: Dataset, cfg: BoostConfig) -> int:
    if cfg.synth_per_round == BALANCE:
        n_maj, n_min = class_counts(train)
        return max(n_maj - n_min, 0)
    return int(cfg.synth_per_round)


def _temporary_set(train, d, N, cfg, synthesis, rng):
    if synthesis is Synthesis.NONE or N == 0:
        return train, d.weights.copy()
    if synthesis is Synthesis.WEIGHTED:
        synthetic = weighted_synthesis(train, d, N, cfg.k, rng).samples
    elif synthesis is Synthesis.UNIFORM_SMOTE:
        synthetic = smote(train, N, cfg.k, rng).samples
    else:
        raise ValueError(f"unknown synthesis strategy {synthesis!r}")
    temp = train.append_minority(synthetic)
    if cfg.synthetic_weighting == "uniform":
        return temp, np.full(temp.m, 1.0 / temp.m)
    minority_mass = d.weights[train.minority_mask].sum()
    synth_w = np.full(synthetic.shape[0], minority_mass / synthetic.shape[0])
    return temp, np.concatenate([d.weights, synth_w])


def train_boosted(train: Dataset, cfg: BoostConfig = BoostConfig(),
                  synthesis: Synthesis = Synthesis.WEIGHTED, rng=None,
                  on_round: Optional[Callable[[RoundInfo], None]] = None) -> BoostedEnsemble:
    """Run the boosting loop and return the fitted ensemble.

    Parameters
    ----------
    train : Dataset
        Training data with both classes present.
    cfg : BoostConfig
    synthesis : Synthesis
        Per-round minority synthesis strategy.
    rng : numpy Generator or seed
    on_round : callable, optional
        Called with a :class:`RoundInfo` after each round is scored.

    Notes
    -----
    A pseudo-loss at or below ``cfg.epsilon_floor`` is clamped to it. A
    pseudo-loss of 0.5 or more stops training and discards that round,
    except in the first round, which is kept with the loss clamped to
    ``0.5 - epsilon_floor``.
    """
    if not train.has_both_classes:
        raise SingleClassError("boosting needs both classes in the training set")
    rng = as_generator(rng)
    synthesis = Synthesis(synthesis)
    d = init_uniform(train.m)
    N = synth_count(train, cfg) if synthesis is not Synthesis.NONE else 0
    members: List[Tuple[DecisionTree, float]] = []

    for t in range(1, cfg.rounds + 1):
        temp, tree_w = _temporary_set(train, d, N, cfg, synthesis, rng)
        tree = fit_tree(temp, tree_w, cfg.tree)
        scores = true_wrong_scores(tree, train)
        eps = pseudo_loss(d, scores)
        accepted = True
        if eps >= 0.5 - _HALF_TOL:
            if t > 1:
                accepted = False
            else:
                eps = 0.5 - cfg.epsilon_floor
        eps = max(eps, cfg.epsilon_floor)
        beta = eps / (1.0 - eps) if accepted else None
        if on_round is not None:
            on_round(RoundInfo(t, temp, tree_w, d, eps, beta, accepted))
        if not accepted:
            break
        members.append((tree, beta))
        d = update_weights(d, beta, scores)

    return BoostedEnsemble(tuple(members))


def predict_ensemble(e: BoostedEnsemble, x) -> Tuple[ClassLabel, float]:
    """Label and minority vote share for one feature vector."""
    x = np.asarray(x, dtype=np.float64).reshape(1, -1)
    v = e.votes(x)[0]
    label = MINORITY if v[1] > v[0] else MAJORITY
    return label, float(v[1] / (v[0] + v[1]))
