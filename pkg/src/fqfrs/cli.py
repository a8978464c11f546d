"""Command-line harness.

Subcommands:

* ``approx``    one dataset, one model: per-class lower (and upper) degrees
* ``sweep``     model/alpha grid with inconsistency metrics and report files
* ``verify``    built-in counterexamples plus the property smoke suite
* ``granules``  maximal granule levels for one decision class

Exit codes: 0 on success, 1 on verification mismatch, 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .approximations import ApproximationModel, MODEL_KINDS, lower_approx, upper_approx
from .connectives import residual_implicator, tnorm_by_name
from .experiment import (
    DEFAULT_ALPHAS,
    DEFAULT_MODELS,
    Dataset,
    DatasetError,
    SweepConfig,
    emit_report,
    format_real,
    identity_run,
    load_bundled_dataset,
    load_dataset,
    quantifiers_from_alphas,
    run_sweep,
)
from .granularity import max_granule_level
from .measures import identity_quantifier, zadeh_s
from .verification import run_verification

_TNORM_NAMES = ("lukasiewicz", "minimum", "product")


def _add_dataset_options(parser: argparse.ArgumentParser):
    parser.add_argument("--dataset", metavar="PATH",
                        help="CSV file with a header row (default: the bundled "
                             "synthetic dataset)")
    parser.add_argument("--label-col", default=None,
                        help="label column name or index (default: last column)")
    parser.add_argument("--delimiter", default=",", help="field delimiter")


def _add_output_options(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        dest="output_format", help="report file format")
    parser.add_argument("--out", default="fqfrs_report", metavar="DIR",
                        help="output directory for report files")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqfrs",
        description="Fuzzy quantifier-based fuzzy rough set approximations "
                    "and granularity audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_approx = sub.add_parser("approx", help="approximate the decision classes "
                                             "of one dataset with one model")
    _add_dataset_options(p_approx)
    p_approx.add_argument("--model", choices=MODEL_KINDS, default="ywic")
    p_approx.add_argument("--alpha", default="id",
                          help="smooth-step knee in [0,1], or 'id' for the "
                               "identity quantifier (default: id)")
    p_approx.add_argument("--tnorm", choices=_TNORM_NAMES, default="lukasiewicz")
    p_approx.add_argument("--upper", action="store_true",
                          help="also compute upper approximations")
    _add_output_options(p_approx)

    p_sweep = sub.add_parser("sweep", help="sweep models over the alpha grid and "
                                           "report inconsistency metrics")
    _add_dataset_options(p_sweep)
    p_sweep.add_argument("--models", default=",".join(DEFAULT_MODELS),
                         help="comma-separated model kinds "
                              f"(subset of {','.join(MODEL_KINDS)})")
    p_sweep.add_argument("--alphas", default=",".join(format_real(a) for a in DEFAULT_ALPHAS),
                         help="comma-separated, strictly increasing alpha values")
    p_sweep.add_argument("--tnorm", choices=_TNORM_NAMES, default="lukasiewicz")
    p_sweep.add_argument("--tolerance", type=float, default=1e-9,
                         help="gap above which an element counts as inconsistent")
    p_sweep.add_argument("--plot-data", action="store_true",
                         help="also write the per-alpha long-format table and "
                              "render per-dataset figures")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="parallel workers over (model, alpha) cells")
    _add_output_options(p_sweep)

    sub.add_parser("verify", help="reproduce the built-in counterexamples and "
                                  "run the property smoke suite")

    p_gran = sub.add_parser("granules", help="emit maximal granule levels for "
                                             "one decision class")
    _add_dataset_options(p_gran)
    p_gran.add_argument("--class-value", required=True,
                        help="decision class (a value of the label column)")
    p_gran.add_argument("--tnorm", choices=_TNORM_NAMES, default="lukasiewicz")
    _add_output_options(p_gran)

    return parser


def _load(args) -> Dataset:
    if args.dataset is None:
        return load_bundled_dataset()
    label_col = args.label_col
    if label_col is not None and label_col.lstrip("-").isdigit():
        label_col = int(label_col)
    return load_dataset(args.dataset, label_col=label_col, delimiter=args.delimiter)


def _parse_alpha(raw: str):
    if raw.strip().lower() == "id":
        return "id", identity_quantifier()
    value = float(raw)
    if not 0.0 <= value <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    return format_real(value), zadeh_s(value, 1.0)


def _write_rows(out_dir: Path, stem: str, output_format: str,
                header: list[str], rows: list[list[str]]) -> Path:
    from .experiment import _write_csv, _write_json

    out_dir.mkdir(parents=True, exist_ok=True)
    if output_format == "csv":
        return _write_csv(out_dir / f"{stem}.csv", header, rows)
    return _write_json(out_dir / f"{stem}.json", header, rows)


def _cmd_approx(args) -> int:
    ds = _load(args)
    alpha_label, quantifier = _parse_alpha(args.alpha)
    tnorm = tnorm_by_name(args.tnorm)
    implicator = residual_implicator(tnorm)
    R = ds.relation()
    model = ApproximationModel.of_kind(args.model, quantifier, R.universe,
                                       tnorm, implicator)
    header = ["dataset", "model", "alpha", "class", "element", "lower"]
    if args.upper:
        header.append("upper")
    rows = []
    for cls, concept in ds.decision_sets().items():
        lower = lower_approx(model, R, concept)
        upper = upper_approx(model, R, concept) if args.upper else None
        for i in range(ds.n_instances):
            row = [ds.name, args.model, alpha_label, cls, str(i),
                   format_real(lower.degrees[i])]
            if upper is not None:
                row.append(format_real(upper.degrees[i]))
            rows.append(row)
    path = _write_rows(Path(args.out), "approximations", args.output_format,
                       header, rows)
    print(path)
    return 0


def _cmd_sweep(args) -> int:
    ds = _load(args)
    models = tuple(m.strip() for m in args.models.split(",") if m.strip())
    alphas = tuple(float(a) for a in args.alphas.split(",") if a.strip())
    cfg = SweepConfig(models=models, alphas=alphas, tnorm=args.tnorm,
                      tolerance=args.tolerance, output_format=args.output_format,
                      plot_data=args.plot_data, jobs=args.jobs)
    report = run_sweep(ds, cfg)
    for path in emit_report(report, args.out, cfg.output_format, cfg.plot_data):
        print(path)
    return 0


def _cmd_verify(_args) -> int:
    counterexamples, checks = run_verification()
    failed = False
    for result in counterexamples:
        status = "PASS" if result.passed else "FAIL"
        print(f"counterexample {result.fixture.name:<6} {status} "
              f"(max deviation {result.max_deviation:.2e}, "
              f"tolerance {result.fixture.tolerance:g})")
        if not result.passed:
            failed = True
            print(f"  lower     {np.array2string(result.lower, precision=8)}")
            print(f"  expected  {np.asarray(result.fixture.reference_lower)}")
            print(f"  reapprox  {np.array2string(result.reapprox, precision=8)}")
            print(f"  expected  {np.asarray(result.fixture.reference_reapprox)}")
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"property {check.name:<32} {status} ({check.detail})")
        if not check.passed:
            failed = True
    return 1 if failed else 0


def _cmd_granules(args) -> int:
    ds = _load(args)
    if args.class_value not in ds.classes:
        raise DatasetError(
            f"class {args.class_value!r} not present; classes: {ds.classes}"
        )
    tnorm = tnorm_by_name(args.tnorm)
    implicator = residual_implicator(tnorm)
    R = ds.relation()
    concept = ds.decision_sets()[args.class_value]
    rows = []
    for x in range(ds.n_instances):
        level = max_granule_level(R, concept, x, implicator)
        rows.append([ds.name, args.class_value, str(x), format_real(level)])
    path = _write_rows(Path(args.out), "granules", args.output_format,
                       ["dataset", "class", "center", "level"], rows)
    print(path)
    return 0


_COMMANDS = {
    "approx": _cmd_approx,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "granules": _cmd_granules,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DatasetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
