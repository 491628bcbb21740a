"""Markdown and CSV rendering of aggregated results.

Markdown cells read ``mean±std`` with two decimals. Rounding is decimal
round-half-to-even applied to the shortest repr of the value, so ``0.745``
renders as ``0.74`` and ``0.735`` as ``0.74``.
"""

import csv
import io
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Dict, Optional

from ..analysis import DifficultyProfile
from .experiment import AggregateResult

# (column title, metric field) in results-table order
RESULT_COLUMNS = (
    ("OA", "overall_accuracy"),
    ("Precision", "precision"),
    ("Recall", "recall"),
    ("F_measure", "f1"),
    ("G_mean", "g_mean"),
    ("Specificity", "specificity"),
    ("Sensitivity", "recall"),
    ("ROC AUC", "auc"),
)

WIN_METRICS = (
    ("Precision", "precision"),
    ("Recall", "recall"),
    ("F_measure", "f1"),
    ("G_mean", "g_mean"),
    ("Specificity", "specificity"),
    ("AUC", "auc"),
)


def round_half_even(x: float, decimals: int = 2) -> Decimal:
    return Decimal(repr(float(x))).quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_EVEN)


def format_value(x: Optional[float], decimals: int = 2) -> str:
    if x is None:
        return "undef"
    return str(round_half_even(x, decimals))


def format_cell(stats, decimals: int = 2, runs: Optional[int] = None) -> str:
    if stats.mean is None:
        return "undef"
    text = f"{format_value(stats.mean, decimals)}±{format_value(stats.std, decimals)}"
    if runs is not None and stats.n_defined < runs:
        text += f" (n={stats.n_defined})"
    return text


def winning_counts(res: AggregateResult, decimals: Optional[int] = 2) -> Dict[str, Dict[str, int]]:
    """Per model and metric, on how many datasets the model has the best mean.

    Means are compared after rounding to ``decimals`` (``None`` compares full
    precision). Every model tied for the best value is awarded the win;
    undefined means never win.
    """
    wins = {m: {title: 0 for title, _ in WIN_METRICS} for m in res.models}
    for ds in res.datasets:
        for title, metric in WIN_METRICS:
            values = {}
            for m in res.models:
                stats = res.cells.get((ds, m), {}).get(metric)
                if stats is None or stats.mean is None:
                    continue
                values[m] = stats.mean if decimals is None else round_half_even(stats.mean, decimals)
            if not values:
                continue
            best = max(values.values())
            for m, v in values.items():
                if v == best:
                    wins[m][title] += 1
    return wins


def _md_table(header, rows):
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(out)


def _profile_row(name, p: DifficultyProfile):
    return [name, p.m, p.n, f"Maj: {p.n_majority} Min: {p.n_minority}",
            format_value(p.imbalance_ratio, 1), p.n_safe, p.n_unsafe,
            f"{format_value(p.unsafe_pct, 1)}%"]


PROFILE_HEADER = ["Dataset", "Instances", "Features", "Outcome frequency", "Imbalance ratio",
                  "Safe minority", "Unsafe minority", "Unsafe minority %"]


def render_profiles_markdown(profiles: Dict[str, DifficultyProfile]) -> str:
    return _md_table(PROFILE_HEADER, [_profile_row(n, p) for n, p in profiles.items()])


def _markdown(res, profiles, decimals):
    parts = [f"# Results\n\nruns={res.runs}, base_seed={res.base_seed}"]
    for ds in res.datasets:
        rows = []
        for m in res.models:
            stats = res.cells.get((ds, m))
            if stats is None:
                continue
            rows.append([m] + [format_cell(stats[metric], decimals, res.runs)
                               for _, metric in RESULT_COLUMNS])
        parts.append(f"## {ds}\n\n" + _md_table(["Model"] + [t for t, _ in RESULT_COLUMNS], rows))
        failed = [(m, len(res.failures.get((ds, m), []))) for m in res.models]
        failed = [f"{m}: {n}" for m, n in failed if n]
        if failed:
            parts.append("Failed runs (excluded): " + ", ".join(failed))
    wins = winning_counts(res, decimals)
    parts.append("## Winning counts\n\n" + _md_table(
        ["Model"] + [t for t, _ in WIN_METRICS],
        [[m] + [wins[m][t] for t, _ in WIN_METRICS] for m in res.models]))
    if profiles:
        parts.append("## Dataset characteristics\n\n" + render_profiles_markdown(profiles))
    return "\n\n".join(parts) + "\n"


def _csv(res, profiles, decimals):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["section", "dataset", "model", "key", "value", "std",
                "n_defined", "n_undefined", "n_failed"])
    for ds in res.datasets:
        for m in res.models:
            for metric, s in res.cells.get((ds, m), {}).items():
                w.writerow(["result", ds, m, metric,
                            "" if s.mean is None else repr(s.mean),
                            "" if s.std is None else repr(s.std),
                            s.n_defined, s.n_undefined, s.n_failed])
    wins = winning_counts(res, decimals)
    for m in res.models:
        for title, _ in WIN_METRICS:
            w.writerow(["wins", "", m, title, wins[m][title], "", "", "", ""])
    for name, p in (profiles or {}).items():
        for key in ("m", "n", "n_majority", "n_minority", "imbalance_ratio",
                    "n_safe", "n_unsafe", "unsafe_pct"):
            value = getattr(p, key)
            w.writerow(["profile", name, "", key, repr(value) if isinstance(value, float) else value,
                        "", "", "", ""])
    return buf.getvalue()


def emit_report(res: AggregateResult, profiles: Optional[Dict[str, DifficultyProfile]] = None,
                format: str = "markdown", decimals: int = 2) -> str:
    """Render results, winning counts and dataset characteristics.

    Parameters
    ----------
    res : AggregateResult
    profiles : dict of name -> DifficultyProfile, optional
    format : {"markdown", "csv"}
        CSV is RFC 4180 with full-precision values in long format.
    decimals : int, default=2
        Display precision, also used when comparing means for wins.
    """
    if not res.datasets or not res.models:
        raise ValueError("nothing to report")
    if format == "markdown":
        return _markdown(res, profiles or {}, decimals)
    if format == "csv":
        return _csv(res, profiles or {}, decimals)
    raise ValueError(f"unknown report format {format!r}")
