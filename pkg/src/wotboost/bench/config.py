"""Flat ``key = value`` experiment config files.

Example::

    # Pima, 100 runs of every model
    runs = 100
    seed = 0
    models = DT, SMOTE+DT, ADASYN+DT, SMOTEBoost, WOTBoost
    dataset.pima = pima.csv
    dataset.pima.label = Class
    dataset.pima.minority = positive

Recognised global keys: ``runs``, ``seed``, ``models``, ``k``, ``rounds``,
``max_depth``, ``min_samples_leaf``, ``leaf_smoothing``, ``synth_per_round``,
``synthetic_weighting``, ``train_fraction``, ``stratified``, ``normalize``,
``jobs``, ``format``. Per-dataset keys: ``dataset.<name>`` (path, relative
to the config file), ``.label``, ``.minority``, ``.delimiter``. Blank lines
and ``#`` comments are ignored. Datasets keep their order of appearance.
"""

import os

from ..boosting import BALANCE, BoostConfig
from ..exceptions import ConfigError
from ..tree import TreeConfig
from .experiment import DatasetSpec, ExperimentConfig
from .io import CsvSchema

_BOOL = {"true": True, "yes": True, "on": True, "1": True,
         "false": False, "no": False, "off": False, "0": False}

GLOBAL_KEYS = {"runs", "seed", "models", "k", "rounds", "max_depth", "min_samples_leaf",
               "leaf_smoothing", "synth_per_round", "synthetic_weighting", "train_fraction",
               "stratified", "normalize", "jobs", "format"}


def parse_config_text(text: str):
    """Return ``(globals, datasets)``: a dict and an ordered dict of dicts."""
    values, datasets = {}, {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key.startswith("dataset."):
            name, _, attr = key[len("dataset."):].partition(".")
            if not name:
                raise ConfigError(f"line {line_no}: dataset entry needs a name")
            entry = datasets.setdefault(name, {})
            attr = attr or "path"
            if attr not in ("path", "label", "minority", "delimiter"):
                raise ConfigError(f"line {line_no}: unknown dataset key {attr!r}")
            entry[attr] = value
        elif key in GLOBAL_KEYS:
            values[key] = value
        else:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
    return values, datasets


def _bool(key, value):
    try:
        return _BOOL[value.lower()]
    except KeyError:
        raise ConfigError(f"{key}: expected a boolean, got {value!r}") from None


def _int(key, value):
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None


def build_config(values, datasets, base_dir=".", overrides=None) -> ExperimentConfig:
    """Turn parsed values (plus CLI ``overrides``, same keys) into a config."""
    try:
        return _build(values, datasets, base_dir, overrides)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _build(values, datasets, base_dir, overrides):
    values = {**values, **{k: v for k, v in (overrides or {}).items() if v is not None}}
    specs = []
    for name, entry in datasets.items():
        if "path" not in entry:
            raise ConfigError(f"dataset {name!r} has no path")
        path = entry["path"]
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        label = entry.get("label", "-1")
        try:
            label = int(label)
        except ValueError:
            pass
        delimiter = entry.get("delimiter", ",")
        if delimiter in ("\\t", "tab"):
            delimiter = "\t"
        specs.append(DatasetSpec(name, path, CsvSchema(label, entry.get("minority", "1"), delimiter)))

    def get(key, conv, default):
        if key not in values:
            return default
        v = values[key]
        return v if not isinstance(v, str) else conv(key, v)

    tree = TreeConfig(
        max_depth=get("max_depth", _int, TreeConfig.max_depth),
        min_samples_leaf=get("min_samples_leaf", _int, TreeConfig.min_samples_leaf),
        leaf_smoothing=get("leaf_smoothing", lambda k, v: float(v), TreeConfig.leaf_smoothing),
    )
    synth = values.get("synth_per_round", BALANCE)
    if isinstance(synth, str) and synth != BALANCE:
        synth = _int("synth_per_round", synth)
    boost = BoostConfig(rounds=get("rounds", _int, 10), synth_per_round=synth, tree=tree,
                        synthetic_weighting=values.get("synthetic_weighting", "boost"))
    models = values.get("models")
    if isinstance(models, str):
        models = tuple(m for m in (s.strip() for s in models.split(",")) if m)
    return ExperimentConfig(
        datasets=tuple(specs),
        models=models or ExperimentConfig.models,
        runs=get("runs", _int, 100),
        train_fraction=get("train_fraction", lambda k, v: float(v), 0.5),
        stratified=get("stratified", _bool, True),
        k=get("k", _int, 5),
        boost=boost,
        base_seed=get("seed", _int, 0),
        normalize_features=get("normalize", _bool, True),
        jobs=get("jobs", _int, 1),
    )


def load_config(path, overrides=None) -> ExperimentConfig:
    with open(path) as fh:
        values, datasets = parse_config_text(fh.read())
    return build_config(values, datasets, os.path.dirname(os.path.abspath(path)), overrides)

