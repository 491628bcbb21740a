"""Repeated split / fit / evaluate protocol and its aggregation."""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..analysis import DifficultyProfile, minmax_scale
from ..boosting import BoostConfig
from ..data import Dataset, SplitSpec, stratified_split
from ..exceptions import SingleClassError, WOTBoostError
from ..metrics import METRIC_NAMES, MetricReport, compute_metrics, confusion, roc_auc
from .io import CsvSchema, load_csv
from .models import MODEL_NAMES, canonical_model, fit_model, model_rng


@dataclass(frozen=True)
class DatasetSpec:
    name: str
    path: str
    schema: CsvSchema = CsvSchema()


@dataclass(frozen=True)
class ExperimentConfig:
    datasets: Tuple[DatasetSpec, ...] = ()
    models: Tuple[str, ...] = MODEL_NAMES
    runs: int = 100
    train_fraction: float = 0.5
    stratified: bool = True
    k: int = 5
    boost: BoostConfig = field(default_factory=BoostConfig)
    base_seed: int = 0
    normalize_features: bool = True
    jobs: int = 1

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.base_seed < 0:
            raise ValueError("base_seed must be non-negative")
        object.__setattr__(self, "models", tuple(canonical_model(m) for m in self.models))
        SplitSpec(self.train_fraction)  # validates the fraction

    @property
    def boost_config(self) -> BoostConfig:
        return replace(self.boost, k=self.k)


@dataclass(frozen=True)
class CellStats:
    mean: Optional[float]
    std: Optional[float]
    n_defined: int
    n_undefined: int = 0
    n_failed: int = 0


@dataclass
class AggregateResult:
    """Mean/std/count per (dataset, model, metric).

    ``cells[(dataset, model)][metric]`` is a :class:`CellStats`;
    ``failures[(dataset, model)]`` lists messages of runs that raised.
    """

    datasets: List[str]
    models: List[str]
    runs: int
    base_seed: int = 0
    cells: Dict[Tuple[str, str], Dict[str, CellStats]] = field(default_factory=dict)
    failures: Dict[Tuple[str, str], List[str]] = field(default_factory=dict)

    def cell(self, dataset, model, metric) -> CellStats:
        return self.cells[(dataset, canonical_model(model))][metric]

    def to_dict(self):
        return {
            "datasets": self.datasets,
            "models": self.models,
            "runs": self.runs,
            "base_seed": self.base_seed,
            "cells": [
                {"dataset": d, "model": m, "metric": k, **asdict(s)}
                for (d, m), stats in self.cells.items() for k, s in stats.items()
            ],
            "failures": [
                {"dataset": d, "model": m, "messages": msgs}
                for (d, m), msgs in self.failures.items() if msgs
            ],
        }

    @classmethod
    def from_dict(cls, obj):
        res = cls(list(obj["datasets"]), [canonical_model(m) for m in obj["models"]],
                  int(obj["runs"]), int(obj.get("base_seed", 0)))
        for c in obj["cells"]:
            key = (c["dataset"], canonical_model(c["model"]))
            res.cells.setdefault(key, {})[c["metric"]] = CellStats(
                c.get("mean"), c.get("std"), int(c.get("n_defined", 0)),
                int(c.get("n_undefined", 0)), int(c.get("n_failed", 0)))
        for f in obj.get("failures", []):
            res.failures[(f["dataset"], canonical_model(f["model"]))] = list(f["messages"])
        return res


def save_results(path, result: AggregateResult, profiles=None):
    payload = {"result": result.to_dict(),
               "profiles": {name: asdict(p) for name, p in (profiles or {}).items()}}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_results(path):
    """Return ``(AggregateResult, {dataset: DifficultyProfile})``."""
    with open(path) as fh:
        payload = json.load(fh)
    if "result" not in payload:
        payload = {"result": payload}
    profiles = {name: DifficultyProfile(**p) for name, p in payload.get("profiles", {}).items()}
    return AggregateResult.from_dict(payload["result"]), profiles


def evaluate_model(model, test: Dataset) -> MetricReport:
    pred = model.predict(test.features)
    try:
        auc = roc_auc(test.labels, model.minority_score(test.features))
    except SingleClassError:
        auc = None
    return compute_metrics(confusion(test.labels, pred), auc)


def run_once(ds: Dataset, cfg: ExperimentConfig, r: int):
    """One run: split with seed ``base_seed + r`` and evaluate every model.

    Returns ``{model: MetricReport | error message}``.
    """
    seed = cfg.base_seed + r
    train, test = stratified_split(ds, SplitSpec(cfg.train_fraction, seed, cfg.stratified))
    if cfg.normalize_features:
        ref = train.features
        train, test = (train.with_features(minmax_scale(train.features, ref)),
                       test.with_features(minmax_scale(test.features, ref)))
    boost = cfg.boost_config
    out = {}
    for name in cfg.models:
        try:
            model = fit_model(name, train, boost, model_rng(seed, name))
            out[name] = evaluate_model(model, test)
        except WOTBoostError as exc:
            out[name] = f"run {r}: {type(exc).__name__}: {exc}"
    return out


def _run_star(args):
    return run_once(*args)


def aggregate(per_run, models, metrics=METRIC_NAMES):
    """Collapse a list of ``run_once`` outputs into per-metric :class:`CellStats`."""
    cells, failures = {}, {}
    for model in models:
        outcomes = [run[model] for run in per_run]
        failed = [o for o in outcomes if isinstance(o, str)]
        ok = [o for o in outcomes if not isinstance(o, str)]
        failures[model] = failed
        stats = {}
        for metric in metrics:
            vals = [getattr(o, metric) for o in ok]
            defined = np.array([v for v in vals if v is not None], dtype=np.float64)
            n_def = int(defined.size)
            stats[metric] = CellStats(
                mean=float(defined.mean()) if n_def else None,
                std=float(defined.std()) if n_def else None,
                n_defined=n_def,
                n_undefined=len(vals) - n_def,
                n_failed=len(failed),
            )
        cells[model] = stats
    return cells, failures


def run_experiment(cfg: ExperimentConfig, datasets: Optional[Dict[str, Dataset]] = None
                   ) -> AggregateResult:
    """Run every model on every dataset ``cfg.runs`` times and aggregate.

    ``datasets`` supplies in-memory data by name; otherwise each
    ``cfg.datasets`` entry is loaded from its CSV path. Results depend only
    on the config (including ``base_seed``), not on ``jobs``.
    """
    if datasets is None:
        datasets = {spec.name: load_csv(spec.path, spec.schema) for spec in cfg.datasets}
    result = AggregateResult(list(datasets), list(cfg.models), cfg.runs, cfg.base_seed)
    for name, ds in datasets.items():
        jobs = [(ds, cfg, r) for r in range(cfg.runs)]
        if cfg.jobs > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                per_run = list(pool.map(_run_star, jobs))
        else:
            per_run = [run_once(*j) for j in jobs]
        cells, failures = aggregate(per_run, cfg.models)
        for model in cfg.models:
            result.cells[(name, model)] = cells[model]
            result.failures[(name, model)] = failures[model]
    return result

