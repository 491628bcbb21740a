"""
Why overall accuracy misleads on imbalanced data
================================================

A classifier that always answers "majority" looks excellent by accuracy
and useless by every minority-aware metric.
"""

import numpy as np

from wotboost import compute_metrics, confusion, roc_auc

truth = np.r_[np.zeros(998, dtype=int), np.ones(2, dtype=int)]
always_majority = np.zeros(1000, dtype=int)

r = compute_metrics(confusion(truth, always_majority))
print("overall accuracy:", r.overall_accuracy)
print("recall:", r.recall, " g_mean:", r.g_mean)
# no minority predictions at all: precision is 0/0 and stays undefined
print("precision:", r.precision, " f1:", r.f1)

##############################################################################
# A constant score carries no ranking information either

print("AUC of a constant score:", roc_auc(truth, np.zeros(1000)))
