"""The five compared models, each fit on one training split."""

import numpy as np

from ..boosting import BoostConfig, Synthesis, train_boosted
from ..data import Dataset, class_counts, init_uniform
from ..samplers import adasyn, smote
from ..tree import fit_tree

MODEL_NAMES = ("DT", "SMOTE+DT", "ADASYN+DT", "SMOTEBoost", "WOTBoost")

# short names as used in results tables
ALIASES = {
    "dt": "DT",
    "s": "SMOTE+DT", "smote": "SMOTE+DT", "smote+dt": "SMOTE+DT",
    "a": "ADASYN+DT", "adasyn": "ADASYN+DT", "adasyn+dt": "ADASYN+DT",
    "sm": "SMOTEBoost", "smoteboost": "SMOTEBoost",
    "wot": "WOTBoost", "wotboost": "WOTBoost",
}


def canonical_model(name: str) -> str:
    key = name.strip().lower()
    if key not in ALIASES:
        raise ValueError(f"unknown model {name!r}; choose from {', '.join(MODEL_NAMES)}")
    return ALIASES[key]


def _uniform_tree(ds, cfg):
    return fit_tree(ds, init_uniform(ds.m).weights, cfg.tree)


def fit_model(name: str, train: Dataset, cfg: BoostConfig, rng):
    """Fit model ``name``; the result has ``predict`` and ``minority_score``."""
    name = canonical_model(name)
    if name == "DT":
        return _uniform_tree(train, cfg)
    if name == "SMOTE+DT":
        n_maj, n_min = class_counts(train)
        batch = smote(train, max(n_maj - n_min, 0), cfg.k, rng)
        return _uniform_tree(train.append_minority(batch.samples), cfg)
    if name == "ADASYN+DT":
        batch = adasyn(train, cfg.k, 1.0, rng)
        return _uniform_tree(train.append_minority(batch.samples), cfg)
    if name == "SMOTEBoost":
        return train_boosted(train, cfg, Synthesis.UNIFORM_SMOTE, rng)
    return train_boosted(train, cfg, Synthesis.WEIGHTED, rng)


def model_rng(seed: int, name: str) -> np.random.Generator:
    """Per-run, per-model stream; independent of which other models run."""
    return np.random.default_rng([seed, MODEL_NAMES.index(canonical_model(name))])
