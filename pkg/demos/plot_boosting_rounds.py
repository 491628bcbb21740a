"""
Watching the boosting loop
==========================

``train_boosted`` calls an optional hook after every round. We use it to
follow the pseudo-loss, the vote weight and the size of the temporary
training set.
"""

import numpy as np

from wotboost import BoostConfig, Synthesis, TreeConfig, evaluate, make_dataset, train_boosted

rng = np.random.default_rng(1)
X = np.vstack([rng.normal(0.0, 1.0, (200, 3)), rng.normal(0.8, 1.0, (40, 3))])
y = np.r_[np.zeros(200, dtype=int), np.ones(40, dtype=int)]
ds = make_dataset(X, y)


def show(info):
    n_maj, n_min = np.bincount(info.temporary.labels)
    beta = "stop" if info.beta is None else f"{np.log(1 / info.beta):.3f}"
    print(f"round {info.t:2d}  eps={info.epsilon:.3f}  log(1/beta)={beta}  temp={n_maj}+{n_min}")


cfg = BoostConfig(rounds=8, tree=TreeConfig(max_depth=3))
ens = train_boosted(ds, cfg, Synthesis.WEIGHTED, rng=0, on_round=show)

##############################################################################
# Scores on the training data, as a sanity check rather than a benchmark

r = evaluate(ds.labels, ens.predict(ds.features), ens.minority_score(ds.features))
print(f"recall={r.recall:.2f} specificity={r.specificity:.2f} g_mean={r.g_mean:.2f} auc={r.auc:.2f}")
