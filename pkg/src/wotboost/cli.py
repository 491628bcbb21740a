"""Command line entry point: ``wotboost profile | bench | report``."""

import argparse
import os
import sys

from .analysis import profile
from .bench.config import build_config, parse_config_text
from .bench.experiment import load_results, run_experiment, save_results
from .bench.io import CsvSchema, load_csv
from .bench.report import emit_report, render_profiles_markdown
from .exceptions import WOTBoostError


def _label(value):
    try:
        return int(value)
    except ValueError:
        return value


def _write(text, output):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


def cmd_profile(args):
    schema = CsvSchema(_label(args.label), args.minority, args.delimiter)
    ds = load_csv(args.csv, schema)
    name = args.name or os.path.splitext(os.path.basename(args.csv))[0]
    p = profile(ds, k=args.k, normalize=args.normalize)
    if args.format == "csv":
        fields = ("m", "n", "n_majority", "n_minority", "imbalance_ratio",
                  "n_safe", "n_unsafe", "unsafe_pct", "normalized")
        text = "dataset," + ",".join(fields) + "\r\n"
        text += name + "," + ",".join(repr(getattr(p, f)) if isinstance(getattr(p, f), float)
                                      else str(getattr(p, f)) for f in fields) + "\r\n"
    else:
        text = render_profiles_markdown({name: p}) + "\n"
    _write(text, args.output)


def cmd_bench(args):
    with open(args.config) as fh:
        values, datasets = parse_config_text(fh.read())
    overrides = {
        "seed": args.seed, "runs": args.runs, "models": args.models, "k": args.k,
        "rounds": args.rounds, "max_depth": args.max_depth, "jobs": args.jobs,
    }
    if args.no_normalize:
        overrides["normalize"] = False
    cfg = build_config(values, datasets, os.path.dirname(os.path.abspath(args.config)), overrides)
    if not cfg.datasets:
        raise WOTBoostError("config lists no datasets")
    loaded = {spec.name: load_csv(spec.path, spec.schema) for spec in cfg.datasets}
    result = run_experiment(cfg, loaded)
    profiles = {name: profile(ds, k=cfg.k) for name, ds in loaded.items()}
    if args.save:
        save_results(args.save, result, profiles)
    fmt = args.format or values.get("format", "markdown")
    _write(emit_report(result, profiles, fmt), args.output)


def cmd_report(args):
    result, profiles = load_results(args.results)
    _write(emit_report(result, profiles, args.format), args.output)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wotboost",
        description="Weighted-oversampling boosting and imbalanced-learning benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="difficulty profile (safe/unsafe minority) of a CSV")
    p.add_argument("csv")
    p.add_argument("--label", default="-1", help="label column name or index (default: last)")
    p.add_argument("--minority", default="1", help="label value of the minority class")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--name", help="dataset name shown in the report")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--normalize", action="store_true", help="min-max scale before k-NN")
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_profile)

    b = sub.add_parser("bench", help="run the repeated-split comparison from a config file")
    b.add_argument("config")
    b.add_argument("--seed", type=int)
    b.add_argument("--runs", type=int)
    b.add_argument("--models", help="comma-separated, e.g. DT,WOTBoost")
    b.add_argument("--k", type=int)
    b.add_argument("--rounds", type=int)
    b.add_argument("--max-depth", type=int)
    b.add_argument("--jobs", type=int)
    b.add_argument("--format", choices=("markdown", "csv"))
    b.add_argument("--no-normalize", action="store_true")
    b.add_argument("--save", help="also write aggregated results as JSON")
    b.add_argument("--output", "-o")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("report", help="re-render results saved by 'bench --save'")
    r.add_argument("results")
    r.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    r.add_argument("--output", "-o")
    r.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (WOTBoostError, OSError, ValueError, KeyError) as exc:
        print(f"wotboost {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
