"""
A small Pima benchmark
======================

Profile the dataset, then compare the five models over a few random
stratified splits. The full comparison uses 100 runs, see
``wotboost bench data/pima_bench.cfg``.
"""

import os

from wotboost import profile
from wotboost.bench import CsvSchema, ExperimentConfig, load_csv, run_experiment
from wotboost.bench.report import emit_report

here = os.path.dirname(os.path.abspath(__file__))
pima = load_csv(os.path.join(here, "..", "data", "pima.csv"), CsvSchema("Class", "positive"))

p = profile(pima)
print(f"{p.m} rows, IR {p.imbalance_ratio:.2f}, {p.n_unsafe}/{p.n_minority} minority unsafe")

##############################################################################
# Ten runs keep this quick; every model sees the same splits

res = run_experiment(ExperimentConfig(runs=10), {"pima": pima})
print(emit_report(res, {"pima": p}))
