import os
import re

import numpy as np
import pytest

from wotboost import make_dataset
from wotboost.bench import CsvSchema, load_csv

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")
SCHEMA = CsvSchema("Class", "positive")


def data_path(name):
    return os.path.join(DATA, name)


@pytest.fixture(scope="session")
def pima():
    return load_csv(data_path("pima.csv"), SCHEMA)


@pytest.fixture(scope="session")
def haberman():
    return load_csv(data_path("haberman.csv"), SCHEMA)


@pytest.fixture(scope="session")
def abalone():
    return load_csv(data_path("abalone9-18.csv"), SCHEMA)


def random_dataset(rng, n_maj, n_min, n_features=2, shift=1.0):
    X = np.vstack([rng.normal(0.0, 1.0, (n_maj, n_features)),
                   rng.normal(shift, 1.0, (n_min, n_features))])
    y = np.r_[np.zeros(n_maj, dtype=int), np.ones(n_min, dtype=int)]
    return make_dataset(X, y)


@pytest.fixture
def blobs():
    return random_dataset(np.random.default_rng(7), 20, 8)


# one PASS/FAIL line per acceptance criterion at the end of the run
_CRITERIA = {}
_CRIT_RE = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _CRIT_RE.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    failed = report.failed
    if report.when == "call" or failed:
        _CRITERIA[key] = _CRITERIA.get(key, True) and not failed
        if report.skipped and report.when == "call":
            _CRITERIA[key] = None


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_CRITERIA.items()):
        status = "SKIP" if ok is None else "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}  {name}")
