"""Confusion-matrix metrics and ROC AUC, minority as the positive class.

A metric whose formula divides zero by zero is reported as ``None``
(undefined), never coerced to 0.
"""

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np
from scipy.stats import rankdata

from .data import MINORITY
from .exceptions import LengthMismatchError, SingleClassError

METRIC_NAMES = ("overall_accuracy", "precision", "recall", "f1", "g_mean",
                "specificity", "auc")


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricReport:
    overall_accuracy: Optional[float]
    precision: Optional[float]
    recall: Optional[float]
    f1: Optional[float]
    g_mean: Optional[float]
    specificity: Optional[float]
    auc: Optional[float] = None

    @property
    def sensitivity(self) -> Optional[float]:
        return self.recall

    def as_dict(self):
        return asdict(self)


def confusion(truth, predicted) -> ConfusionMatrix:
    truth = np.asarray(truth)
    predicted = np.asarray(predicted)
    if truth.shape != predicted.shape or truth.ndim != 1:
        raise LengthMismatchError("truth and predicted must be equal-length vectors")
    if truth.size == 0:
        raise LengthMismatchError("need at least one sample")
    pos = truth == MINORITY
    hit = predicted == MINORITY
    return ConfusionMatrix(
        tp=int(np.count_nonzero(pos & hit)),
        fp=int(np.count_nonzero(~pos & hit)),
        fn=int(np.count_nonzero(pos & ~hit)),
        tn=int(np.count_nonzero(~pos & ~hit)),
    )


def _ratio(num, den):
    return num / den if den else None


def compute_metrics(cm: ConfusionMatrix, auc: Optional[float] = None) -> MetricReport:
    if cm.total <= 0:
        raise ValueError("confusion matrix is empty")
    precision = _ratio(cm.tp, cm.tp + cm.fp)
    recall = _ratio(cm.tp, cm.tp + cm.fn)
    specificity = _ratio(cm.tn, cm.tn + cm.fp)
    if precision is None or recall is None or precision + recall == 0:
        f1 = None
    else:
        f1 = 2.0 * precision * recall / (precision + recall)
    g_mean = None if recall is None or specificity is None else math.sqrt(recall * specificity)
    return MetricReport(
        overall_accuracy=(cm.tp + cm.tn) / cm.total,
        precision=precision,
        recall=recall,
        f1=f1,
        g_mean=g_mean,
        specificity=specificity,
        auc=auc,
    )


def _check_scores(truth, scores):
    truth = np.asarray(truth)
    scores = np.asarray(scores, dtype=np.float64)
    if truth.shape != scores.shape or truth.ndim != 1:
        raise LengthMismatchError("truth and scores must be equal-length vectors")
    pos = truth == MINORITY
    n_pos = int(np.count_nonzero(pos))
    n_neg = pos.size - n_pos
    if n_pos == 0 or n_neg == 0:
        raise SingleClassError("ROC AUC needs both classes")
    return pos, scores, n_pos, n_neg


def roc_auc(truth, scores) -> float:
    """Mann-Whitney form: P(score_pos > score_neg) + 0.5 * P(tie)."""
    pos, scores, n_pos, n_neg = _check_scores(truth, scores)
    ranks = rankdata(scores)
    u = ranks[pos].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))


def roc_curve(truth, scores):
    """(fpr, tpr) after sweeping the threshold down through every distinct score."""
    pos, scores, n_pos, n_neg = _check_scores(truth, scores)
    order = np.argsort(-scores, kind="stable")
    s = scores[order]
    p = pos[order]
    last_of_run = np.r_[s[1:] != s[:-1], True]
    tps = np.cumsum(p)[last_of_run]
    fps = np.cumsum(~p)[last_of_run]
    tpr = np.r_[0, tps] / n_pos
    fpr = np.r_[0, fps] / n_neg
    return fpr, tpr


def roc_auc_trapezoid(truth, scores) -> float:
    """Trapezoidal area under :func:`roc_curve`; independent check on :func:`roc_auc`."""
    fpr, tpr = roc_curve(truth, scores)
    return float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2.0))


def evaluate(truth, predicted, scores=None) -> MetricReport:
    """All metrics for one prediction run; AUC is added when ``scores`` is given."""
    auc = roc_auc(truth, scores) if scores is not None else None
    return compute_metrics(confusion(truth, predicted), auc)
