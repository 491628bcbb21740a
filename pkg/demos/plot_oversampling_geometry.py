"""
Where SMOTE, ADASYN and weighted oversampling put new points
=============================================================

All three samplers interpolate between a minority point and one of its
minority neighbors. They differ only in which parents get the synthetics.
"""

import numpy as np

from wotboost import adasyn, make_dataset, smote, weighted_synthesis

rng = np.random.default_rng(0)

# a majority cloud with a small minority cluster sitting on its edge
X = np.vstack([rng.normal(0.0, 1.0, (60, 2)), rng.normal(1.5, 0.6, (12, 2))])
y = np.r_[np.zeros(60, dtype=int), np.ones(12, dtype=int)]
ds = make_dataset(X, y)

##############################################################################
# SMOTE spreads the 48 synthetics evenly over the 12 minority points

b = smote(ds, 48, k=5, rng=rng)
print("SMOTE per parent:   ", np.bincount(b.parent_indices, minlength=12))

##############################################################################
# ADASYN favors minority points whose neighborhoods hold majority samples

b = adasyn(ds, k=5, rng=rng)
print("ADASYN per parent:  ", np.bincount(b.parent_indices, minlength=12))

##############################################################################
# Weighted oversampling follows a boosting distribution. Here half the mass
# sits on the minority point nearest the majority mean.

d = np.full(ds.m, 0.5 / (ds.m - 1))
hard = ds.minority_indices[np.argmin(np.linalg.norm(ds.minority_features, axis=1))]
d[hard] = 0.5
b = weighted_synthesis(ds, d, 48, k=5, rng=rng)
print("weighted per parent:", np.bincount(b.parent_indices, minlength=12))

# every synthetic lies on a parent-neighbor segment
Xmin = ds.minority_features
recon = Xmin[b.parent_indices] + b.lambdas[:, None] * (Xmin[b.neighbor_indices] - Xmin[b.parent_indices])
print("max reconstruction error:", np.abs(recon - b.samples).max())
