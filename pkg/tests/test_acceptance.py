"""Acceptance criteria 1-10, one test each (``test_criterion_NN_*``).

conftest prints a PASS/FAIL line per criterion in the terminal summary.
"""

import os
import time

import numpy as np
import pytest

import oracles
from conftest import DATA, random_dataset
from wotboost import (
    BoostConfig,
    MAJORITY,
    MINORITY,
    Synthesis,
    allocate_counts,
    adasyn,
    compute_metrics,
    confusion,
    profile,
    pseudo_loss,
    roc_auc,
    roc_auc_trapezoid,
    smote,
    train_boosted,
    update_weights,
    weighted_oversample,
)
from wotboost.bench import ExperimentConfig, fit_model, load_results, run_experiment
from wotboost.bench.report import emit_report, format_value, winning_counts
from wotboost.cli import main
from wotboost.metrics import ConfusionMatrix

HERE = os.path.dirname(os.path.abspath(__file__))


def test_criterion_01_pseudo_loss_algebra():
    start = time.perf_counter()
    for seed in range(1000):
        rng = np.random.default_rng(seed)
        m = int(rng.integers(3, 7))
        d = rng.dirichlet(np.ones(m))
        s_true = rng.random(m)
        s_wrong = 1.0 - s_true if seed % 2 else rng.random(m)
        scores = np.column_stack([s_true, s_wrong])

        eps = pseudo_loss(d, scores)
        ref = oracles.pseudo_loss_literal(list(d), list(s_true), list(s_wrong))
        assert abs(eps - ref) <= 1e-12

        beta = float(rng.uniform(0.01, 0.99))
        new = update_weights(d, beta, scores).weights
        ref_new = oracles.update_literal(list(d), beta, list(s_true), list(s_wrong))
        np.testing.assert_allclose(new, ref_new, rtol=0, atol=1e-12)

        if 0.0 < eps < 0.5:
            b = eps / (1.0 - eps)
            assert 0.0 < b < 1.0
    assert time.perf_counter() - start < 5.0


def test_criterion_02_allocation_exactness():
    rng = np.random.default_rng(2)
    start = time.perf_counter()
    for _ in range(10_000):
        size = int(rng.integers(1, 40))
        w = rng.random(size) ** 3
        w[rng.random(size) < 0.2] = 0.0
        if w.sum() == 0:
            w[0] = 1.0
        N = int(rng.integers(0, 500))
        g = allocate_counts(w, N).counts
        targets = N * w / w.sum()
        assert g.sum() == N
        assert np.all(np.abs(g - targets) < 1.0)
        assert np.all(g >= 0)
    assert time.perf_counter() - start < 5.0


def _check_segments(samples, minority, k, parents=None):
    pool = minority.tolist()
    knn = [set(oracles.brute_knn(pool[i], pool, k, skip=i)) for i in range(len(pool))]
    for s_idx, x in enumerate(samples.tolist()):
        candidates = range(len(pool)) if parents is None else [int(parents[s_idx])]
        ok = False
        for p in candidates:
            for q in knn[p]:
                if oracles.on_segment(x, pool[p], pool[q]) is not None:
                    ok = True
                    break
            if ok:
                break
        assert ok, f"synthetic {x} is not on any parent-neighbor segment"


def test_criterion_03_synthesis_geometry():
    start = time.perf_counter()
    for cfg in range(100):
        rng = np.random.default_rng(1000 + cfg)
        n_min = int(rng.integers(6, 16))
        n_maj = n_min + int(rng.integers(1, 25))
        n_feat = int(rng.integers(1, 5))
        k = int(rng.integers(1, min(5, n_min - 1) + 1))
        ds = random_dataset(rng, n_maj, n_min, n_feat)
        Xmin = ds.minority_features

        b = smote(ds, int(rng.integers(1, 30)), k, rng)
        _check_segments(b.samples, Xmin, k, b.parent_indices)
        # reconstructed lambda equals the drawn one
        for x, p, q, lam in zip(b.samples, b.parent_indices, b.neighbor_indices, b.lambdas):
            assert q in oracles.brute_knn(Xmin[p], Xmin.tolist(), k, skip=int(p))
            if np.any(Xmin[q] != Xmin[p]):
                assert abs(oracles.on_segment(x.tolist(), Xmin[p].tolist(), Xmin[q].tolist()) - lam) < 1e-9

        b = adasyn(ds, k, 1.0, rng)
        assert len(b) == n_maj - n_min
        _check_segments(b.samples, Xmin, k, b.parent_indices)

        d = rng.dirichlet(np.ones(ds.m))
        temp = weighted_oversample(ds, d, int(rng.integers(1, 30)), k, rng)
        _check_segments(temp.features[ds.m:], Xmin, k)
        assert np.all(temp.labels[ds.m:] == MINORITY)
    assert time.perf_counter() - start < 10.0


def test_criterion_04_balance_contract():
    for i in range(20):
        rng = np.random.default_rng(400 + i)
        n_min = int(rng.integers(6, 20))
        n_maj = n_min + int(rng.integers(0, 40))
        ds = random_dataset(rng, n_maj, n_min, int(rng.integers(1, 5)))
        seen = []

        def hook(info):
            y = info.temporary.labels
            seen.append((int(np.sum(y == MAJORITY)), int(np.sum(y == MINORITY))))

        train_boosted(ds, BoostConfig(rounds=5), Synthesis.WEIGHTED, rng, on_round=hook)
        assert seen
        assert all(a == b == n_maj for a, b in seen)


def test_criterion_05_metric_formulas():
    cases = [
        # tp fp fn tn -> P R F1 G spec OA (hand tallied)
        ((1, 1, 1, 1), (0.5, 0.5, 0.5, 0.5, 0.5, 0.5)),
        ((3, 1, 2, 4), (0.75, 0.6, 2 * 0.75 * 0.6 / 1.35, (0.6 * 0.8) ** 0.5, 0.8, 0.7)),
        ((5, 0, 0, 5), (1.0, 1.0, 1.0, 1.0, 1.0, 1.0)),
    ]
    for cm, (P, R, F, G, S, OA) in cases:
        r = compute_metrics(ConfusionMatrix(*cm))
        got = (r.precision, r.recall, r.f1, r.g_mean, r.specificity, r.overall_accuracy)
        np.testing.assert_allclose(got, (P, R, F, G, S, OA), rtol=0, atol=1e-15)

    truth = np.r_[np.zeros(998, dtype=int), np.ones(2, dtype=int)]
    trap = compute_metrics(confusion(truth, np.zeros(1000, dtype=int)))
    assert trap.overall_accuracy == pytest.approx(0.998)
    assert trap.recall == 0.0 and trap.g_mean == 0.0
    assert trap.precision is None

    rng = np.random.default_rng(5)
    for i in range(1000):
        m = int(rng.integers(2, 60))
        y = rng.integers(0, 2, m)
        y[0], y[1] = 0, 1
        s = rng.random(m)
        if i % 3 == 0:
            s = np.round(s, 1)  # plenty of ties
        assert abs(roc_auc(y, s) - roc_auc_trapezoid(y, s)) <= 1e-12


def test_criterion_06_haberman_profile(haberman):
    start = time.perf_counter()
    p = profile(haberman)
    elapsed = time.perf_counter() - start
    q = profile(haberman, normalize=True)
    print(f"Haberman raw: safe={p.n_safe} unsafe={p.n_unsafe}; "
          f"normalized: safe={q.n_safe} unsafe={q.n_unsafe}")
    assert p.m == 306 and p.n_minority == 81
    assert format_value(p.imbalance_ratio, 1) == "2.8"
    assert abs(p.n_safe - 8) <= 2 and abs(p.n_unsafe - 73) <= 2
    assert elapsed < 1.0


@pytest.mark.slow
def test_criterion_07_pima_band(pima):
    start = time.perf_counter()
    cfg = ExperimentConfig(models=("DT", "WOTBoost"), runs=100)
    res = run_experiment(cfg, {"pima": pima})
    elapsed = time.perf_counter() - start
    g = res.cell("pima", "WOTBoost", "g_mean")
    auc = res.cell("pima", "WOTBoost", "auc")
    g_dt = res.cell("pima", "DT", "g_mean")
    print(f"Pima WOTBoost G-mean {g.mean:.3f}±{g.std:.3f}, AUC {auc.mean:.3f}±{auc.std:.3f}; "
          f"DT G-mean {g_dt.mean:.3f}; {elapsed:.1f}s")
    assert g.n_defined == 100 and auc.n_defined == 100
    assert 0.69 <= g.mean <= 0.79
    assert 0.69 <= auc.mean <= 0.79
    assert g.mean > g_dt.mean
    assert elapsed < 120.0


def test_criterion_08_baseline_equivalence():
    cfg = BoostConfig(rounds=1)
    for i in range(50):
        rng = np.random.default_rng(800 + i)
        n_min = int(rng.integers(3, 30))
        ds = random_dataset(rng, n_min + int(rng.integers(0, 60)), n_min,
                            int(rng.integers(1, 6)), shift=float(rng.uniform(0, 2)))
        X_test = rng.normal(0.5, 1.5, (200, ds.n))
        ens = train_boosted(ds, cfg, Synthesis.NONE, rng)
        dt = fit_model("DT", ds, cfg, rng)
        assert np.array_equal(ens.predict(X_test), dt.predict(X_test))
        assert np.array_equal(ens.predict(ds.features), dt.predict(ds.features))


def test_criterion_09_bench_determinism(tmp_path):
    config = tmp_path / "bench.cfg"
    config.write_text(
        "runs = 3\nseed = 11\nmodels = DT, SMOTE+DT, ADASYN+DT, SMOTEBoost, WOTBoost\n"
        f"dataset.haberman = {os.path.join(DATA, 'haberman.csv')}\n"
        "dataset.haberman.label = Class\ndataset.haberman.minority = positive\n")
    outputs = []
    for fmt in ("markdown", "csv"):
        for i in range(2):
            out = tmp_path / f"report{i}.{fmt}"
            assert main(["bench", str(config), "--format", fmt, "--output", str(out)]) == 0
            outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[2] == outputs[3]
    assert b"WOTBoost" in outputs[0]


def test_criterion_10_winning_counts():
    res, _ = load_results(os.path.join(HERE, "data", "table3_means.json"))
    wins = winning_counts(res)
    assert wins["WOTBoost"]["G_mean"] == 6
    assert wins["WOTBoost"]["AUC"] == 7

    text = emit_report(res)
    section = text.split("## Winning counts", 1)[1]
    header = next(l for l in section.splitlines() if l.startswith("| Model"))
    row = next(l for l in section.splitlines() if l.startswith("| WOTBoost"))
    cols = [c.strip() for c in header.strip("|").split("|")]
    vals = [c.strip() for c in row.strip("|").split("|")]
    table = dict(zip(cols, vals))
    assert table["G_mean"] == "6" and table["AUC"] == "7"
