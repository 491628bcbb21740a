"""Benchmark harness: CSV ingestion, the repeated-split protocol and reports."""

from .experiment import (
    AggregateResult,
    CellStats,
    DatasetSpec,
    ExperimentConfig,
    load_results,
    run_experiment,
    save_results,
)
from .io import CsvSchema, load_csv
from .models import MODEL_NAMES, fit_model
