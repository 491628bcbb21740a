"""Boosting with dynamic weighted minority oversampling for imbalanced data.

The package provides exact k-NN search, SMOTE, ADASYN and weighted
oversampling, a weighted CART weak learner, the boosting loop that ties
oversampling to the boosting distribution (WOTBoost, SMOTEBoost), the usual
imbalanced-classification metrics and a benchmark harness.
"""

from .analysis import DifficultyProfile, Safety, classify_minority_safety, profile
from .boosting import (
    BoostConfig,
    BoostedEnsemble,
    Synthesis,
    predict_ensemble,
    pseudo_loss,
    train_boosted,
    update_weights,
)
from .data import (
    MAJORITY,
    MINORITY,
    ClassLabel,
    Dataset,
    SplitSpec,
    WeightDistribution,
    class_counts,
    imbalance_ratio,
    init_uniform,
    make_dataset,
    stratified_split,
)
from .metrics import (
    ConfusionMatrix,
    MetricReport,
    compute_metrics,
    confusion,
    evaluate,
    roc_auc,
    roc_auc_trapezoid,
)
from .neighbors import NeighborResult, k_nearest, neighbor_class_count
from .samplers import (
    AllocationPlan,
    SynthesisBatch,
    adasyn,
    allocate_counts,
    smote,
    weighted_oversample,
    weighted_synthesis,
)
from .tree import DecisionTree, TreeConfig, fit_tree, predict_label, predict_scores

__version__ = "0.1.0"
