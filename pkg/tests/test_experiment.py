"""Dataset ingestion, sweep harness, report emission and the CLI surface."""

import json

import numpy as np
import pytest

from fqfrs import FuzzySet, lukasiewicz_tnorm, residual_implicator
from fqfrs.cli import main
from fqfrs.counterexamples import COUNTEREXAMPLES
from fqfrs.experiment import (
    DEFAULT_ALPHAS,
    DatasetError,
    SweepConfig,
    emit_report,
    format_real,
    identity_run,
    load_bundled_dataset,
    load_dataset,
    run_sweep,
    sweep_concepts,
)

T_LUK = lukasiewicz_tnorm()
I_LUK = residual_implicator(T_LUK)

EXAMPLE_CSV = """a,label
1.0,pos
0.5,pos
1.0,pos
0.0,neg
0.0,neg
"""


@pytest.fixture
def example_csv(tmp_path):
    path = tmp_path / "example1.csv"
    path.write_text(EXAMPLE_CSV)
    return path


def _block_fixture():
    fixture = COUNTEREXAMPLES[0]
    R = fixture.relation()
    concept = fixture.concept_set(R.universe)
    return R, concept


class TestLoadDataset:
    def test_bundled_dataset(self):
        ds = load_bundled_dataset()
        assert ds.n_instances == 10
        assert ds.n_features == 2
        assert ds.classes == ("a", "b")
        assert ds.label_name == "label"

    def test_example_instance_roundtrip(self, example_csv):
        # a single-feature file whose sigma-scaled relation reproduces the
        # block relation of the first counterexample when sigma is 1
        ds = load_dataset(example_csv, label_col="label")
        assert ds.n_instances == 5 and ds.n_features == 1
        from fqfrs import build_relation

        R = build_relation(ds.features, sigmas=[1.0])
        assert np.allclose(R.degrees, COUNTEREXAMPLES[0].relation().degrees,
                           atol=1e-15)
        pos = ds.decision_sets()["pos"]
        assert np.array_equal(pos.degrees, [1, 1, 1, 0, 0])

    def test_label_column_by_index_and_default(self, example_csv):
        by_index = load_dataset(example_csv, label_col=1)
        by_default = load_dataset(example_csv)
        assert by_index.labels == by_default.labels

    def test_missing_cell_is_located(self, tmp_path):
        path = tmp_path / "broken.csv"
        path.write_text("a,b,label\n1.0,2.0,x\n1.5,,y\n")
        with pytest.raises(DatasetError, match=r"line 3, column 'b'"):
            load_dataset(path)

    def test_non_numeric_cell_is_located(self, tmp_path):
        path = tmp_path / "broken.csv"
        path.write_text("a,label\noops,x\n2.0,y\n")
        with pytest.raises(DatasetError, match=r"line 2, column 'a'"):
            load_dataset(path)

    def test_constant_label_rejected(self, tmp_path):
        path = tmp_path / "onelabel.csv"
        path.write_text("a,label\n1.0,x\n2.0,x\n")
        with pytest.raises(DatasetError, match="2 distinct classes"):
            load_dataset(path)

    def test_unknown_label_column(self, example_csv):
        with pytest.raises(DatasetError, match="not found"):
            load_dataset(example_csv, label_col="missing")

    def test_custom_delimiter(self, tmp_path):
        path = tmp_path / "semi.csv"
        path.write_text("a;label\n1.0;x\n2.0;y\n")
        ds = load_dataset(path, delimiter=";")
        assert ds.n_instances == 2 and ds.classes == ("x", "y")


class TestSweepConfig:
    def test_default_alpha_grid(self):
        assert DEFAULT_ALPHAS[0] == 0.6
        assert DEFAULT_ALPHAS[-1] == 1.0
        assert len(DEFAULT_ALPHAS) == 14
        SweepConfig()  # defaults validate

    def test_invalid_configs(self):
        with pytest.raises(ValueError):
            SweepConfig(models=("nope",))
        with pytest.raises(ValueError):
            SweepConfig(alphas=(0.8, 0.6))
        with pytest.raises(ValueError):
            SweepConfig(alphas=(0.5, 1.2))
        with pytest.raises(ValueError):
            SweepConfig(output_format="xml")
        with pytest.raises(ValueError):
            SweepConfig(jobs=0)


class TestSweepMetrics:
    def test_block_fixture_single_concept_identity_run(self):
        R, concept = _block_fixture()
        cfg = SweepConfig(models=("ywic",))
        report = sweep_concepts("example1", R, {"pos": concept}, cfg,
                                quantifiers=identity_run())
        (cell,) = report.cells
        assert cell.alpha_label == "id"
        assert cell.error == pytest.approx(0.01, abs=1e-12)
        assert cell.percentage == pytest.approx(0.2, abs=0)

    def test_classic_model_reports_zero(self):
        ds = load_bundled_dataset()
        cfg = SweepConfig(models=("classic",), alphas=(0.6, 0.9, 1.0))
        report = run_sweep(ds, cfg)
        for cell in report.cells:
            assert cell.error <= 1e-9
            assert cell.percentage == 0.0

    def test_sugeno_model_reports_zero_at_any_alpha(self):
        ds = load_bundled_dataset()
        cfg = SweepConfig(models=("sugeno",), alphas=(0.6, 0.8, 0.95, 1.0))
        report = run_sweep(ds, cfg)
        for cell in report.cells:
            assert cell.error <= 1e-9

    def test_universal_endpoint_reports_zero_for_all_models(self):
        ds = load_bundled_dataset()
        cfg = SweepConfig(models=("classic", "choquet", "sugeno", "owa",
                                  "ywic", "ywis", "wowac", "wowas"),
                          alphas=(1.0,))
        report = run_sweep(ds, cfg)
        for cell in report.cells:
            assert cell.error <= 1e-9

    def test_maxima_are_consistent_with_cells(self):
        ds = load_bundled_dataset()
        cfg = SweepConfig(alphas=(0.6, 0.8))
        report = run_sweep(ds, cfg)
        assert report.max_error() == max(c.error for c in report.cells)
        assert report.max_percentage() == max(c.percentage for c in report.cells)
        for model, err, pct in report.model_maxima():
            rows = [c for c in report.cells if c.model == model]
            assert err == max(c.error for c in rows)
            assert pct == max(c.percentage for c in rows)

    def test_determinism_across_runs_and_jobs(self, tmp_path):
        ds = load_bundled_dataset()
        outputs = []
        for jobs, sub in ((1, "a"), (1, "b"), (4, "c")):
            cfg = SweepConfig(alphas=(0.6, 0.9, 1.0), jobs=jobs, plot_data=True)
            report = run_sweep(ds, cfg)
            paths = emit_report(report, tmp_path / sub, "csv", plot_data=True,
                                figures=False)
            outputs.append({p.name: p.read_bytes() for p in paths})
        assert outputs[0] == outputs[1] == outputs[2]


class TestEmitReport:
    def test_single_run_csv_row(self, tmp_path):
        R, concept = _block_fixture()
        cfg = SweepConfig(models=("ywic",))
        report = sweep_concepts("example1", R, {"pos": concept}, cfg,
                                quantifiers=identity_run())
        paths = emit_report(report, tmp_path, "csv", plot_data=True, figures=False)
        cells = next(p for p in paths if p.name == "cells.csv")
        assert cells.read_text().splitlines() == [
            "dataset,model,alpha,error,percentage",
            "example1,ywic,id,0.01,0.2",
        ]

    def test_empty_model_list_gives_header_only(self, tmp_path):
        R, concept = _block_fixture()
        cfg = SweepConfig(models=())
        report = sweep_concepts("example1", R, {"pos": concept}, cfg)
        paths = emit_report(report, tmp_path, "csv", plot_data=True, figures=False)
        for stem in ("summary", "models", "cells"):
            path = next(p for p in paths if p.name == f"{stem}.csv")
            lines = path.read_text().splitlines()
            if stem == "summary":
                assert lines == ["dataset,error,percentage", "example1,0,0"]
            else:
                assert len(lines) == 1

    def test_csv_and_json_agree_after_parsing(self, tmp_path):
        ds = load_bundled_dataset()
        cfg = SweepConfig(models=("ywic", "wowac"), alphas=(0.6, 0.9))
        report = run_sweep(ds, cfg)
        csv_paths = emit_report(report, tmp_path / "c", "csv", plot_data=True,
                                figures=False)
        json_paths = emit_report(report, tmp_path / "j", "json", plot_data=True,
                                 figures=False)
        for stem in ("summary", "models", "cells"):
            csv_file = next(p for p in csv_paths if p.name == f"{stem}.csv")
            json_file = next(p for p in json_paths if p.name == f"{stem}.json")
            csv_lines = csv_file.read_text().splitlines()
            header = csv_lines[0].split(",")
            csv_records = [dict(zip(header, line.split(","))) for line in csv_lines[1:]]
            json_records = json.loads(json_file.read_text())
            assert len(csv_records) == len(json_records)
            for crec, jrec in zip(csv_records, json_records):
                for key in header:
                    try:
                        assert float(crec[key]) == float(jrec[key])
                    except ValueError:
                        assert crec[key] == jrec[key]

    def test_figures_rendered_with_plot_data(self, tmp_path):
        ds = load_bundled_dataset()
        cfg = SweepConfig(models=("ywic",), alphas=(0.6, 0.8, 1.0))
        report = run_sweep(ds, cfg)
        paths = emit_report(report, tmp_path, "csv", plot_data=True)
        names = {p.name for p in paths}
        assert "synthetic_error.png" in names
        assert "synthetic_percentage.png" in names
        for p in paths:
            assert p.exists() and p.stat().st_size > 0

    def test_six_significant_digits(self):
        assert format_real(0.0396306123) == "0.0396306"
        assert format_real(1.0) == "1"
        assert format_real(5.55e-18) == "5.55e-18"


class TestCli:
    def test_verify_exits_zero(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 8
        assert "FAIL" not in out

    def test_sweep_writes_reports(self, tmp_path, capsys):
        code = main(["sweep", "--models", "ywic,classic", "--alphas", "0.6,0.9",
                     "--plot-data", "--out", str(tmp_path / "rep")])
        assert code == 0
        assert (tmp_path / "rep" / "summary.csv").exists()
        assert (tmp_path / "rep" / "cells.csv").exists()
        assert (tmp_path / "rep" / "synthetic_error.png").exists()

    def test_sweep_json_format(self, tmp_path):
        code = main(["sweep", "--models", "ywic", "--alphas", "0.6",
                     "--format", "json", "--out", str(tmp_path / "rep")])
        assert code == 0
        records = json.loads((tmp_path / "rep" / "summary.json").read_text())
        assert records[0]["dataset"] == "synthetic"

    def test_approx_with_identity_alpha(self, tmp_path, example_csv):
        code = main(["approx", "--dataset", str(example_csv), "--model", "ywic",
                     "--alpha", "id", "--out", str(tmp_path / "rep")])
        assert code == 0
        lines = (tmp_path / "rep" / "approximations.csv").read_text().splitlines()
        assert lines[0] == "dataset,model,alpha,class,element,lower"
        # "pos" class lower approximation must match the reference vector,
        # modulo the relation being built with sample-deviation scaling
        assert len(lines) == 11

    def test_approx_upper_flag(self, tmp_path):
        code = main(["approx", "--model", "owa", "--alpha", "0.8", "--upper",
                     "--out", str(tmp_path / "rep")])
        assert code == 0
        header = (tmp_path / "rep" / "approximations.csv").read_text().splitlines()[0]
        assert header.endswith(",upper")

    def test_granules_subcommand(self, tmp_path):
        code = main(["granules", "--class-value", "a", "--out", str(tmp_path / "rep")])
        assert code == 0
        lines = (tmp_path / "rep" / "granules.csv").read_text().splitlines()
        assert lines[0] == "dataset,class,center,level"
        assert len(lines) == 11

    def test_input_errors_exit_two(self, tmp_path, capsys):
        assert main(["sweep", "--dataset", str(tmp_path / "missing.csv")]) == 2
        bad = tmp_path / "bad.csv"
        bad.write_text("a,label\nx,y\n1.0,z\n")
        assert main(["sweep", "--dataset", str(bad)]) == 2
        assert main(["granules", "--class-value", "zzz"]) == 2
        assert main(["sweep", "--alphas", "0.9,0.6"]) == 2
        err = capsys.readouterr().err
        assert "error:" in err
