"""Tests for level datasets and branch-line reduction."""

import pytest

from qrotor.core.errors import DataError
from qrotor.core.types import Band, Branch, BranchLine, LevelDataset, ModelKind, RotorParams
from qrotor.fitting.data import (
    PUBLISHED_SIGMA,
    load_branches,
    load_bundled_levels,
    load_levels,
    reduce_branches,
    save_branches,
    save_levels,
    synthesize_branches,
)
from qrotor.spectra import spectrum_table

BAND_ORIGIN = 3961.4


@pytest.fixture
def band_levels():
    """Exact two-term spectra for a lower and an upper band."""
    lower = dict(spectrum_table(ModelKind.III, RotorParams(A=20.55, B=-0.00204), range(0, 21)))
    upper = dict(spectrum_table(ModelKind.III, RotorParams(A=19.79, B=-0.00200), range(0, 22)))
    return lower, upper


@pytest.fixture
def lines(band_levels):
    lower, upper = band_levels
    return synthesize_branches(lower, upper, BAND_ORIGIN)


class TestBundledLevels:
    def test_hf_levels(self, hf_data):
        """Bundled data are the nine observed HF v=0 levels."""
        assert len(hf_data) == 9
        assert hf_data.band == "v=0"
        assert hf_data.levels[0] == (2, pytest.approx(123.33))
        assert hf_data.levels[-1] == (18, pytest.approx(6789.6))

    def test_directory_override(self, tmp_path, small_dataset):
        save_levels(small_dataset, tmp_path / "custom.csv")
        loaded = load_bundled_levels("custom.csv", directory=tmp_path)
        assert loaded.levels == small_dataset.levels

    def test_published_sigma_covers_every_model(self):
        assert set(PUBLISHED_SIGMA) == set(ModelKind)
        assert min(PUBLISHED_SIGMA, key=PUBLISHED_SIGMA.get) == ModelKind.II


class TestReduceBranches:
    def test_lower_band_round_trip(self, band_levels, lines):
        """R(l) - P(l+2) chains reproduce the generating lower-band levels."""
        lower, _ = band_levels
        data = reduce_branches(lines, Band.V0)
        assert data.band == "v=0"
        assert list(data.ells) == list(range(2, 21, 2))
        for ell, value in data.levels:
            assert value == pytest.approx(lower[ell], abs=1e-9)

    def test_upper_band_round_trip(self, band_levels, lines):
        """R(l) - P(l) over odd l reproduce the upper-band levels."""
        _, upper = band_levels
        data = reduce_branches(lines, "v1")
        assert data.band == "v=1"
        assert list(data.ells) == list(range(2, 21, 2))
        for ell, value in data.levels:
            assert value == pytest.approx(upper[ell], abs=1e-9)

    def test_empty(self):
        assert len(reduce_branches([], Band.V0)) == 0

    def test_gap(self, lines):
        """A missing line that later lines depend on is reported."""
        gapped = [line for line in lines if not (line.branch is Branch.R and line.ell == 4)]
        with pytest.raises(DataError, match=r"R\(4\)"):
            reduce_branches(gapped, Band.V0)

    def test_duplicate(self, lines):
        with pytest.raises(DataError, match="Duplicate"):
            reduce_branches(lines + [lines[0]], Band.V0)

    def test_non_positive_spacing(self):
        bad = [BranchLine(Branch.R, 0, 100.0), BranchLine(Branch.P, 2, 200.0)]
        with pytest.raises(DataError, match="spacing"):
            reduce_branches(bad, Band.V0)


class TestSynthesizeBranches:
    def test_line_positions(self, band_levels, lines):
        lower, upper = band_levels
        r0 = next(line for line in lines if line.branch is Branch.R and line.ell == 0)
        p1 = next(line for line in lines if line.branch is Branch.P and line.ell == 1)
        assert r0.wavenumber == pytest.approx(BAND_ORIGIN + upper[1] - lower[0])
        assert p1.wavenumber == pytest.approx(BAND_ORIGIN + upper[0] - lower[1])

    def test_no_p_zero(self, lines):
        assert all(line.ell >= 1 for line in lines if line.branch is Branch.P)


class TestCsv:
    def test_levels_round_trip(self, tmp_path, small_dataset):
        path = tmp_path / "levels.csv"
        save_levels(small_dataset, path)
        assert load_levels(path).levels == small_dataset.levels

    def test_branches_round_trip(self, tmp_path, lines):
        path = tmp_path / "lines.csv"
        save_branches(lines, path)
        assert load_branches(path) == lines

    def test_wavenumbers_keep_every_digit(self, tmp_path):
        """Saved reprs such as 3833.8880000000004 reload bit for bit."""
        lines = [
            BranchLine(Branch.R, 0, 3833.8880000000004),
            BranchLine(Branch.P, 2, 3695.8279999999995),
        ]
        path = tmp_path / "lines.csv"
        save_branches(lines, path)
        assert [line.wavenumber for line in load_branches(path)] == [3833.8880000000004, 3695.8279999999995]

    def test_energies_keep_every_digit(self, tmp_path):
        data = LevelDataset("v=0", [(2, 123.33000000000001), (4, 410.34000000000003)])
        path = tmp_path / "levels.csv"
        save_levels(data, path)
        assert load_levels(path).energies.tolist() == [123.33000000000001, 410.34000000000003]

    def test_lowercase_branch_and_comments(self, tmp_path):
        path = tmp_path / "lines.csv"
        path.write_text("# HF fundamental\nbranch,ell,wavenumber_cm1\nr,0,4000.98\np,1,3920.31\n")
        loaded = load_branches(path)
        assert loaded[0].branch is Branch.R
        assert loaded[1].ell == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_levels(tmp_path / "missing.csv")

    def test_missing_column(self, tmp_path):
        path = tmp_path / "levels.csv"
        path.write_text("ell,energy\n2,123.33\n")
        with pytest.raises(DataError, match="missing columns"):
            load_levels(path)

    def test_non_integer_ell(self, tmp_path):
        path = tmp_path / "levels.csv"
        path.write_text("ell,energy_cm1\n2.5,123.33\n")
        with pytest.raises(DataError, match="integers"):
            load_levels(path)

    def test_empty_cell(self, tmp_path):
        path = tmp_path / "levels.csv"
        path.write_text("ell,energy_cm1\n2,\n4,410.34\n")
        with pytest.raises(DataError):
            load_levels(path)

    def test_unsorted_levels(self, tmp_path):
        path = tmp_path / "levels.csv"
        path.write_text("ell,energy_cm1\n4,410.34\n2,123.33\n")
        with pytest.raises(DataError):
            load_levels(path)

    def test_invalid_line(self, tmp_path):
        path = tmp_path / "lines.csv"
        path.write_text("branch,ell,wavenumber_cm1\nQ,1,4000.0\n")
        with pytest.raises(DataError, match="invalid line"):
            load_branches(path)
