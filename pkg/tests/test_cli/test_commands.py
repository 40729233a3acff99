"""Tests for the command-line interface."""

import json

import pandas as pd
import pytest
from click.testing import CliRunner

from qrotor import __version__
from qrotor.cli import EXIT_INPUT_ERROR, EXIT_NOT_CONVERGED, cli
from qrotor.core.config import save_config
from qrotor.core.types import FitConfig, ModelKind, RotorParams
from qrotor.fitting.data import save_branches, synthesize_branches
from qrotor.series.expansions import ITO_MAX_TERMS
from qrotor.spectra import spectrum_table


@pytest.fixture
def runner():
    return CliRunner()


class TestVersion:
    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output


class TestVerify:
    def test_passes(self, runner, tmp_path):
        path = tmp_path / "report.json"
        result = runner.invoke(cli, ["verify", "--ell-max", "1", "--tau", "0.1,0.3", "-o", str(path)])
        assert result.exit_code == 0, result.output
        report = json.loads(path.read_text())
        assert report["passed"] is True
        assert "real tau=0.3 l=1/2" in report["residuals"]

    def test_phase(self, runner, tmp_path):
        path = tmp_path / "report.json"
        result = runner.invoke(cli, [
            "verify", "--ell-max", "1", "--tau", "0.5", "--regime", "phase", "-o", str(path)
        ])
        assert result.exit_code == 0, result.output
        assert json.loads(path.read_text())["passed"] is True

    def test_root_of_unity(self, runner):
        result = runner.invoke(cli, [
            "verify", "--ell-max", "2", "--tau", "0.5235987755982988", "--regime", "phase"
        ])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "root of unity" in result.output

    def test_dump(self, runner, tmp_path):
        dump = tmp_path / "matrices"
        result = runner.invoke(cli, [
            "verify", "--ell-max", "1", "--tau", "0.2", "--dump-dir", str(dump), "-o", str(tmp_path / "r.json")
        ])
        assert result.exit_code == 0, result.output
        assert (dump / "real_tau0.2_2l2_Lp.txt").exists()
        assert len(list(dump.iterdir())) == 3 * 3

    def test_bad_tau_list(self, runner):
        result = runner.invoke(cli, ["verify", "--ell-max", "1", "--tau", "abc"])
        assert result.exit_code == 2


class TestSpectrum:
    def test_csv(self, runner):
        result = runner.invoke(cli, ["spectrum", "--model", "II", "--A", "20.559", "--tau", "0.00623"])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0] == "ell,energy_cm1"
        assert len(lines) == 1 + 9
        assert lines[1].startswith("2,123.2")

    def test_json(self, runner, tmp_path):
        path = tmp_path / "spectrum.json"
        result = runner.invoke(cli, [
            "spectrum", "--model", "IV", "--a", "93982", "--b", "4.38e-4",
            "--ells", "0,2", "--format", "json", "-o", str(path),
        ])
        assert result.exit_code == 0, result.output
        document = json.loads(path.read_text())
        assert document["model"] == "IV"
        assert document["levels"][0] == [0, 0.0]
        assert document["levels"][1][1] == pytest.approx(123.41, abs=0.01)

    def test_missing_parameter(self, runner):
        result = runner.invoke(cli, ["spectrum", "--model", "III", "--A", "20.55"])
        assert result.exit_code == 2
        assert "--B" in result.output

    def test_invalid_parameter(self, runner):
        result = runner.invoke(cli, ["spectrum", "--model", "I", "--A", "-1", "--tau", "0.01"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_bad_range(self, runner):
        result = runner.invoke(cli, ["spectrum", "--model", "Ip", "--A", "20", "--tau", "0.01", "--ells", "2:x"])
        assert result.exit_code == 2


class TestExpand:
    def test_ito(self, runner):
        result = runner.invoke(cli, ["expand", "--family", "ito", "--tau", "0.00623", "--terms", "20"])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0] == "n,coefficient"
        assert len(lines) == 21

    def test_approx(self, runner, tmp_path):
        path = tmp_path / "coefficients.csv"
        result = runner.invoke(cli, [
            "expand", "--family", "suq2", "--tau", "0.01742", "--terms", "4", "--approx", "-o", str(path)
        ])
        assert result.exit_code == 0, result.output
        frame = pd.read_csv(path)
        assert frame["coefficient"].iloc[0] == pytest.approx(1.0)
        assert frame["coefficient"].iloc[1] == pytest.approx(-0.01742 ** 2 / 3)

    @pytest.mark.parametrize("family, approx, rows", [
        ("suq2", False, 40),
        ("suq2", True, 40),
        ("ito", False, ITO_MAX_TERMS),
        ("ito", True, ITO_MAX_TERMS),
    ])
    def test_default_terms(self, runner, tmp_path, family, approx, rows):
        """The default term count is valid for every family."""
        path = tmp_path / "coefficients.csv"
        args = ["expand", "--family", family, "--tau", "0.01742", "-o", str(path)]
        result = runner.invoke(cli, args + (["--approx"] if approx else []))
        assert result.exit_code == 0, result.output
        assert len(pd.read_csv(path)) == rows

    @pytest.mark.parametrize("approx", [False, True])
    def test_ito_request_clamped(self, runner, tmp_path, approx):
        path = tmp_path / "coefficients.csv"
        args = ["expand", "--family", "ito", "--tau", "0.00623", "--terms", "40", "-o", str(path)]
        result = runner.invoke(cli, args + (["--approx"] if approx else []))
        assert result.exit_code == 0, result.output
        assert len(pd.read_csv(path)) == ITO_MAX_TERMS

    def test_out_of_range(self, runner):
        result = runner.invoke(cli, ["expand", "--family", "suq2", "--tau", "0.6"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestIngest:
    def test_lower_band(self, runner, tmp_path):
        lower = dict(spectrum_table(ModelKind.III, RotorParams(A=20.55, B=-0.00204), range(0, 11)))
        upper = dict(spectrum_table(ModelKind.III, RotorParams(A=19.79, B=-0.002), range(0, 12)))
        lines_path = tmp_path / "lines.csv"
        save_branches(synthesize_branches(lower, upper, 3961.4), lines_path)

        out = tmp_path / "levels.csv"
        result = runner.invoke(cli, ["ingest", "--branches", str(lines_path), "-o", str(out)])
        assert result.exit_code == 0, result.output
        frame = pd.read_csv(out)
        assert frame["ell"].tolist() == [2, 4, 6, 8, 10]
        assert frame["energy_cm1"].iloc[-1] == pytest.approx(lower[10], abs=1e-9)

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["ingest", "--branches", str(tmp_path / "none.csv")])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestFit:
    def test_single_model(self, runner, tmp_path):
        out = tmp_path / "fit.json"
        residuals = tmp_path / "residuals.csv"
        result = runner.invoke(cli, ["fit", "--model", "II", "-o", str(out), "--residuals", str(residuals)])
        assert result.exit_code == 0, result.output
        data = json.loads(out.read_text())
        assert data["model"] == "II"
        assert data["params"]["A"] == pytest.approx(20.559, abs=0.002)
        assert list(pd.read_csv(residuals).columns) == ["ell", "E_exp", "E_th", "residual"]

    def test_all_models(self, runner, tmp_path):
        out = tmp_path / "fits.json"
        result = runner.invoke(cli, ["fit", "-o", str(out), "--residuals", str(tmp_path / "res")])
        assert result.exit_code == 0, result.output
        assert "IIp" not in result.output
        assert "II'" in result.output
        assert [entry["model"] for entry in json.loads(out.read_text())] == [k.value for k in ModelKind]
        assert (tmp_path / "res" / "residuals_IIp.csv").exists()

    def test_user_data(self, runner, tmp_path, hf_data):
        path = tmp_path / "levels.csv"
        hf_data.to_frame().to_csv(path, index=False)
        result = runner.invoke(cli, ["fit", "--model", "III", "--data", str(path)])
        assert result.exit_code == 0, result.output

    def test_not_converged(self, runner, tmp_path):
        config = tmp_path / "fit.yaml"
        save_config(FitConfig(max_iterations=1), config)
        result = runner.invoke(cli, ["fit", "--model", "II", "--config", str(config), "-o", str(tmp_path / "f.json")])
        assert result.exit_code == EXIT_NOT_CONVERGED
        assert "did not converge" in result.output

    def test_missing_data(self, runner, tmp_path):
        result = runner.invoke(cli, ["fit", "--data", str(tmp_path / "none.csv")])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestReport:
    def test_writes_tables(self, runner, tmp_path):
        out = tmp_path / "hf"
        result = runner.invoke(cli, ["report", "-o", str(out)])
        assert result.exit_code == 0, result.output
        for name in ("parameters.txt", "predictions.txt", "predictions.csv", "fits.json"):
            assert (out / name).exists()
        table = pd.read_csv(out / "predictions.csv", dtype=str)
        assert list(table.columns) == ["ell", "exp.", "I", "I'", "II", "II'", "III", "IV"]
        assert table["exp."].tolist()[-1] == "6789.6"
