"""Tests for table and file renderings."""

import json

import numpy as np
import pandas as pd
import pytest

from qrotor.core.types import FitResult, ModelKind
from qrotor.reporting.tables import (
    format_parameter_table,
    format_prediction_table,
    format_value,
    predicted_energies,
    prediction_frame,
    residual_frame,
    rounded_prediction_frame,
    scaled_parameters,
    spectrum_document,
    spectrum_frame,
    write_csv,
    write_json,
)

from qrotor.fitting.data import PUBLISHED_SIGMA
from tests.conftest import PUBLISHED_PARAMS


@pytest.fixture
def published_results():
    return [
        FitResult(kind=kind, params=PUBLISHED_PARAMS[kind], sigma=PUBLISHED_SIGMA[kind], residuals=[])
        for kind in ModelKind
    ]


class TestScaledParameters:
    def test_deformed(self):
        assert scaled_parameters(PUBLISHED_PARAMS[ModelKind.I]) == [("A", "20.553"), ("10^2 tau", "1.742")]

    def test_rotor(self):
        assert scaled_parameters(PUBLISHED_PARAMS[ModelKind.III]) == [("A", "20.550"), ("10^2 B", "-0.204")]

    def test_holmberg_lipas(self):
        assert scaled_parameters(PUBLISHED_PARAMS[ModelKind.IV]) == [("a", "93982"), ("10^3 b", "0.438")]

    def test_unknown(self):
        with pytest.raises(TypeError):
            scaled_parameters(object())


class TestParameterTable:
    def test_rows(self, published_results):
        text = format_parameter_table(published_results)
        lines = text.splitlines()
        assert len(lines) == 2 + 6
        assert "sigma" in lines[0]
        assert lines[4].startswith("II ")
        assert "10^2 tau = 0.623" in lines[4]
        assert lines[4].endswith("0.048")

    def test_not_converged_flag(self, published_results):
        published_results[0].converged = False
        assert "not converged" in format_parameter_table(published_results).splitlines()[2]


class TestPredictionTables:
    def test_format_value(self):
        """One decimal from 1000 cm^-1 up, two below."""
        assert format_value(6789.6388) == "6789.6"
        assert format_value(123.2494) == "123.25"

    def test_predicted_energies(self, hf_data, published_results):
        predicted = predicted_energies(hf_data, published_results[0])
        assert isinstance(predicted, np.ndarray)
        assert predicted.shape == (9,)
        assert predicted[1] == pytest.approx(410.25, abs=0.01)

    def test_prediction_frame(self, hf_data, published_results):
        frame = prediction_frame(hf_data, published_results)
        assert list(frame.columns) == ["ell", "exp.", "I", "I'", "II", "II'", "III", "IV"]
        assert len(frame) == 9
        assert frame["I"].iloc[1] == pytest.approx(410.25, abs=0.01)

    def test_rounded(self, hf_data, published_results):
        rounded = rounded_prediction_frame(prediction_frame(hf_data, published_results))
        assert rounded["exp."].tolist()[0] == "123.33"
        assert rounded["exp."].tolist()[-1] == "6789.6"
        assert rounded["ell"].tolist()[0] == 2

    def test_text_table(self, hf_data, published_results):
        text = format_prediction_table(prediction_frame(hf_data, published_results))
        lines = text.splitlines()
        assert len(lines) == 10
        assert lines[0].split() == ["ell", "exp.", "I", "I'", "II", "II'", "III", "IV"]
        assert lines[1].split()[:3] == ["2", "123.33", "123.25"]

    def test_residual_frame(self, hf_data, published_results):
        frame = residual_frame(hf_data, published_results[2])
        assert list(frame.columns) == ["ell", "E_exp", "E_th", "residual"]
        assert (frame["residual"] == frame["E_exp"] - frame["E_th"]).all()


class TestSpectrumOutput:
    def test_frame(self):
        frame = spectrum_frame([(2, 60.0), (4, 200.0)])
        assert write_csv(frame) == "ell,energy_cm1\n2,60.0\n4,200.0\n"

    def test_document(self):
        params = PUBLISHED_PARAMS[ModelKind.IIPRIME]
        document = spectrum_document(ModelKind.IIPRIME, params, [(0, 0.0), (2, 123.27)])
        assert document["model"] == "IIp"
        assert document["label"] == "II'"
        assert document["params"] == {"A": 20.559, "tau": 0.00623}
        assert document["levels"] == [[0, 0.0], [2, 123.27]]
        assert "tangent" in document["description"]


class TestWriters:
    def test_json(self, tmp_path):
        path = tmp_path / "out" / "fit.json"
        text = write_json({"model": "II"}, path)
        assert text.endswith("\n")
        assert json.loads(path.read_text()) == {"model": "II"}

    def test_csv(self, tmp_path):
        path = tmp_path / "nested" / "levels.csv"
        write_csv(pd.DataFrame({"ell": [2], "energy_cm1": [123.33]}), path)
        assert pd.read_csv(path)["energy_cm1"].tolist() == [123.33]
