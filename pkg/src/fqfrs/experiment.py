"""Dataset ingestion, model/alpha sweeps and report emission.

The sweep protocol: for every decision class (one-vs-rest indicator set),
model and quantifier, compute the model's lower approximation, re-approximate
it classically and aggregate the per-element gaps into an error (mean
absolute gap over classes and instances) and a percentage of inconsistent
elements.  Reports are written as delimited tables; with plot data enabled a
long-format per-alpha table and per-dataset figures are rendered alongside.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .approximations import ApproximationModel, MODEL_KINDS, lower_approx
from .connectives import residual_implicator, tnorm_by_name
from .fuzzy_sets import FuzzyRelation, FuzzySet, build_relation
from .granularity import consistency_report
from .measures import RIMQuantifier, identity_quantifier, zadeh_s

__all__ = [
    "DatasetError",
    "Dataset",
    "load_dataset",
    "bundled_dataset_path",
    "load_bundled_dataset",
    "DEFAULT_ALPHAS",
    "DEFAULT_MODELS",
    "SweepConfig",
    "SweepCell",
    "SweepReport",
    "quantifiers_from_alphas",
    "identity_run",
    "sweep_concepts",
    "run_sweep",
    "emit_report",
    "format_real",
]

DEFAULT_ALPHAS: tuple[float, ...] = (
    0.6, 0.7, 0.8, 0.9,
    0.91, 0.92, 0.93, 0.94, 0.95, 0.96, 0.97, 0.98, 0.99, 1.0,
)
DEFAULT_MODELS: tuple[str, ...] = ("wowac", "wowas", "ywic", "ywis")


class DatasetError(ValueError):
    """Raised on malformed dataset files; the message names the cell."""


def format_real(value: float) -> str:
    """Render a real with 6 significant digits (report convention)."""
    return f"{float(value):.6g}"


@dataclass(frozen=True)
class Dataset:
    """A classification table: numeric feature matrix plus class labels."""

    name: str
    features: np.ndarray
    labels: tuple[str, ...]
    feature_names: tuple[str, ...]
    label_name: str

    def __post_init__(self):
        X = np.asarray(self.features, dtype=float)
        if X.ndim != 2 or X.shape[1] < 1:
            raise DatasetError("features must form an n-by-m matrix with m >= 1")
        if X.shape[0] < 2:
            raise DatasetError("a dataset needs at least 2 instances")
        if not np.all(np.isfinite(X)):
            raise DatasetError("features contain non-finite values")
        if len(self.labels) != X.shape[0]:
            raise DatasetError("one label per instance is required")
        if len(set(self.labels)) < 2:
            raise DatasetError("a dataset needs at least 2 distinct classes")
        X.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n_instances(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    @property
    def classes(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.labels)))

    @property
    def sigmas(self) -> np.ndarray:
        """Per-feature sample standard deviations."""
        return self.features.std(axis=0, ddof=1)

    def relation(self) -> FuzzyRelation:
        return build_relation(self.features, self.sigmas)

    def decision_sets(self) -> dict[str, FuzzySet]:
        """Crisp one-vs-rest indicator set per class, in class order."""
        labels = np.asarray(self.labels)
        sets = {}
        for cls in self.classes:
            degrees = (labels == cls).astype(float)
            sets[cls] = FuzzySet.of(degrees)
        return sets


def _resolve_label_column(header: list[str], label_col) -> int:
    if label_col is None:
        return len(header) - 1
    if isinstance(label_col, int):
        index = label_col
    else:
        if label_col in header:
            return header.index(label_col)
        try:
            index = int(label_col)
        except ValueError:
            raise DatasetError(
                f"label column {label_col!r} not found in header {header}"
            ) from None
    if not -len(header) <= index < len(header):
        raise DatasetError(f"label column index {index} out of range")
    return index % len(header)


def load_dataset(path, label_col=None, delimiter: str = ",",
                 name: str | None = None) -> Dataset:
    """Read a delimited file with a header row into a Dataset.

    All non-label columns must be numeric; missing or unparseable cells are
    reported with their line number and column name.
    """
    path = Path(path)
    with path.open(newline="") as handle:
        reader = csv.reader(handle, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetError(f"{path}: file is empty, a header row is required") from None
        header = [h.strip() for h in header]
        label_index = _resolve_label_column(header, label_col)
        feature_names = [h for i, h in enumerate(header) if i != label_index]
        rows: list[list[float]] = []
        labels: list[str] = []
        for lineno, record in enumerate(reader, start=2):
            if not record or all(not cell.strip() for cell in record):
                continue
            if len(record) != len(header):
                raise DatasetError(
                    f"{path}: line {lineno} has {len(record)} fields, expected {len(header)}"
                )
            values = []
            for i, cell in enumerate(record):
                cell = cell.strip()
                column = header[i]
                if i == label_index:
                    if not cell:
                        raise DatasetError(
                            f"{path}: line {lineno}, column {column!r}: missing label"
                        )
                    labels.append(cell)
                    continue
                if not cell:
                    raise DatasetError(
                        f"{path}: line {lineno}, column {column!r}: missing value"
                    )
                try:
                    parsed = float(cell)
                except ValueError:
                    raise DatasetError(
                        f"{path}: line {lineno}, column {column!r}: "
                        f"could not parse {cell!r} as a number"
                    ) from None
                if not math.isfinite(parsed):
                    raise DatasetError(
                        f"{path}: line {lineno}, column {column!r}: non-finite value"
                    )
                values.append(parsed)
            rows.append(values)
    if not feature_names:
        raise DatasetError(f"{path}: no feature columns besides the label column")
    if len(rows) < 2:
        raise DatasetError(f"{path}: a dataset needs at least 2 data rows")
    return Dataset(
        name=name or path.stem,
        features=np.asarray(rows, dtype=float),
        labels=tuple(labels),
        feature_names=tuple(feature_names),
        label_name=header[label_index],
    )


def bundled_dataset_path() -> Path:
    """Location of the synthetic dataset shipped with the package."""
    return Path(str(resources.files("fqfrs").joinpath("data/synthetic.csv")))


def load_bundled_dataset() -> Dataset:
    return load_dataset(bundled_dataset_path(), label_col="label", name="synthetic")


@dataclass(frozen=True)
class SweepConfig:
    """Grid of models and quantifier parameters to evaluate."""

    models: tuple[str, ...] = DEFAULT_MODELS
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    tnorm: str = "lukasiewicz"
    tolerance: float = 1e-9
    output_format: str = "csv"
    plot_data: bool = False
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(self.models))
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        for model in self.models:
            if model not in MODEL_KINDS:
                raise ValueError(f"unknown model {model!r}; choose from {MODEL_KINDS}")
        if any(not 0.0 <= a <= 1.0 for a in self.alphas):
            raise ValueError("alpha values must lie in [0, 1]")
        if any(b <= a for a, b in zip(self.alphas, self.alphas[1:])):
            raise ValueError("alpha values must be strictly increasing")
        if self.tolerance < 0:
            raise ValueError("tolerance must be non-negative")
        if self.output_format not in ("csv", "json"):
            raise ValueError("output format must be 'csv' or 'json'")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass(frozen=True)
class SweepCell:
    model: str
    alpha_label: str
    alpha_value: float | None
    error: float
    percentage: float


@dataclass(frozen=True)
class SweepReport:
    dataset: str
    models: tuple[str, ...]
    cells: tuple[SweepCell, ...] = field(default=())

    def max_error(self) -> float:
        return max((c.error for c in self.cells), default=0.0)

    def max_percentage(self) -> float:
        return max((c.percentage for c in self.cells), default=0.0)

    def model_maxima(self) -> list[tuple[str, float, float]]:
        """Per model: maxima of error and percentage over the alpha grid."""
        out = []
        for model in self.models:
            rows = [c for c in self.cells if c.model == model]
            out.append((
                model,
                max((c.error for c in rows), default=0.0),
                max((c.percentage for c in rows), default=0.0),
            ))
        return out


def quantifiers_from_alphas(alphas) -> list[tuple[str, float | None, RIMQuantifier]]:
    """Smooth-step quantifiers with knees at (alpha, 1); alpha = 1 denotes
    the crisp universal quantifier."""
    return [(format_real(a), float(a), zadeh_s(float(a), 1.0)) for a in alphas]


def identity_run() -> list[tuple[str, float | None, RIMQuantifier]]:
    """A single run with the identity quantifier, labelled 'id'."""
    return [("id", None, identity_quantifier())]


def _evaluate_cell(R, concepts, model_kind, quantifier, tnorm, implicator,
                   tolerance) -> tuple[float, float]:
    n = R.universe.size
    model = ApproximationModel.of_kind(model_kind, quantifier, R.universe,
                                       tnorm, implicator)
    gaps = []
    inconsistent = 0
    for concept in concepts.values():
        lower = lower_approx(model, R, concept)
        report = consistency_report(R, lower, implicator, tolerance)
        gaps.append(math.fsum(np.abs(report.per_element_gap)))
        inconsistent += len(report.inconsistent_elements)
    denominator = len(concepts) * n
    return math.fsum(gaps) / denominator, inconsistent / denominator


def sweep_concepts(dataset_name: str, R: FuzzyRelation, concepts: dict[str, FuzzySet],
                   cfg: SweepConfig,
                   quantifiers: list[tuple[str, float | None, RIMQuantifier]] | None = None,
                   ) -> SweepReport:
    """Evaluate the model/quantifier grid against explicit concept sets.

    Cell order (model-major, then quantifier) is fixed, and results are
    collected in that order regardless of the level of parallelism.
    """
    if not concepts:
        raise ValueError("at least one concept set is required")
    tnorm = tnorm_by_name(cfg.tnorm)
    implicator = residual_implicator(tnorm)
    runs = quantifiers if quantifiers is not None else quantifiers_from_alphas(cfg.alphas)
    grid = [(model, label, value, quantifier)
            for model in cfg.models
            for label, value, quantifier in runs]

    def cell(entry):
        model, label, value, quantifier = entry
        error, percentage = _evaluate_cell(R, concepts, model, quantifier,
                                           tnorm, implicator, cfg.tolerance)
        return SweepCell(model, label, value, error, percentage)

    if cfg.jobs > 1 and len(grid) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            cells = tuple(pool.map(cell, grid))
    else:
        cells = tuple(cell(entry) for entry in grid)
    return SweepReport(dataset_name, cfg.models, cells)


def run_sweep(ds: Dataset, cfg: SweepConfig) -> SweepReport:
    """Sweep over the dataset's one-vs-rest decision classes."""
    return sweep_concepts(ds.name, ds.relation(), ds.decision_sets(), cfg)


def _write_csv(path: Path, header: list[str], rows: list[list[str]]) -> Path:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def _write_json(path: Path, header: list[str], rows: list[list[str]]) -> Path:
    records = []
    for row in rows:
        record = {}
        for key, cell in zip(header, row):
            try:
                record[key] = float(cell)
            except ValueError:
                record[key] = cell
        records.append(record)
    path.write_text(json.dumps(records, indent=2) + "\n")
    return path


def _safe_stem(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in name)


def _render_figures(reports: list[SweepReport], out_dir: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    written = []
    for report in reports:
        for metric, attr in (("error", "error"), ("percentage", "percentage")):
            fig, ax = plt.subplots(figsize=(6.0, 4.0))
            for model in report.models:
                points = [(c.alpha_value, getattr(c, attr))
                          for c in report.cells
                          if c.model == model and c.alpha_value is not None]
                if not points:
                    continue
                xs, ys = zip(*sorted(points))
                ax.plot(xs, ys, marker="o", markersize=3, label=model)
            ax.set_xlabel("alpha")
            ax.set_ylabel(metric)
            ax.set_title(f"{report.dataset}: {metric} vs alpha")
            if any(c.alpha_value is not None for c in report.cells):
                ax.legend()
            fig.tight_layout()
            target = out_dir / f"{_safe_stem(report.dataset)}_{metric}.png"
            fig.savefig(target, dpi=150)
            plt.close(fig)
            written.append(target)
    return written


def emit_report(reports, out_dir, output_format: str = "csv",
                plot_data: bool = False, figures: bool | None = None) -> list[Path]:
    """Write the sweep tables (and, with plot data, figures) to ``out_dir``.

    Emits a per-dataset maxima table, a per-(dataset, model) maxima table
    and, when ``plot_data`` is set, the long-format per-alpha table plus one
    figure per dataset and metric.  Returns the written paths.
    """
    if isinstance(reports, SweepReport):
        reports = [reports]
    reports = list(reports)
    if output_format not in ("csv", "json"):
        raise ValueError("output format must be 'csv' or 'json'")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write = _write_csv if output_format == "csv" else _write_json
    suffix = ".csv" if output_format == "csv" else ".json"

    summary_rows = [[r.dataset, format_real(r.max_error()), format_real(r.max_percentage())]
                    for r in reports]
    model_rows = [[r.dataset, model, format_real(err), format_real(pct)]
                  for r in reports
                  for model, err, pct in r.model_maxima()]
    written = [
        write(out / f"summary{suffix}", ["dataset", "error", "percentage"], summary_rows),
        write(out / f"models{suffix}", ["dataset", "model", "error", "percentage"], model_rows),
    ]
    if plot_data:
        cell_rows = [[r.dataset, c.model, c.alpha_label,
                      format_real(c.error), format_real(c.percentage)]
                     for r in reports for c in r.cells]
        written.append(write(out / f"cells{suffix}",
                             ["dataset", "model", "alpha", "error", "percentage"],
                             cell_rows))
    if figures or (figures is None and plot_data):
        written.extend(_render_figures(reports, out))
    return written
