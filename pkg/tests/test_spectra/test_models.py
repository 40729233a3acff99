"""Tests for the six rotational models."""

import math

import numpy as np
import pytest

from qrotor.core.errors import DomainError
from qrotor.core.types import DeformedParams, HolmbergLipasParams, ModelKind, RotorParams
from qrotor.spectra import ModelRegistry, energy, get_model, spectrum_table
from qrotor.spectra.models import HolmbergLipasModel, SinusModel

from tests.conftest import HF_ELLS, PUBLISHED_PARAMS, PUBLISHED_LEVELS


class TestRegistry:
    def test_all_models_registered(self):
        assert list(ModelRegistry.list_models()) == list(ModelKind)

    def test_lookup_by_flag(self):
        assert isinstance(get_model("Ip"), SinusModel)
        assert get_model(ModelKind.IV).kind is ModelKind.IV

    def test_unknown(self):
        with pytest.raises(KeyError, match="Unknown model"):
            get_model("V")

    def test_descriptions(self):
        """Every model documents its closed form."""
        for model_cls in ModelRegistry.list_models().values():
            assert model_cls.__doc__


class TestEnergy:
    def test_model_i(self):
        """A [l][l+1] with phase q."""
        assert energy(ModelKind.I, PUBLISHED_PARAMS[ModelKind.I], 4) == pytest.approx(410.25, abs=0.01)

    def test_model_iv(self):
        assert energy(ModelKind.IV, PUBLISHED_PARAMS[ModelKind.IV], 2) == pytest.approx(123.34, abs=0.1)

    @pytest.mark.parametrize("kind", list(ModelKind))
    def test_bandhead(self, kind):
        """Every model puts l = 0 at zero energy."""
        assert energy(kind, PUBLISHED_PARAMS[kind], 0) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("kind", [ModelKind.I, ModelKind.IPRIME, ModelKind.II, ModelKind.IIPRIME])
    def test_small_deformation_is_rigid_rotor(self, kind):
        """As tau -> 0 every deformed model tends to A l(l+1)."""
        value = energy(kind, DeformedParams(A=10.0, tau=1e-6), 6)
        assert value == pytest.approx(10.0 * 42, rel=1e-8)

    def test_model_ii_closed_form(self):
        tau, ell = 0.3, 5
        expected = (1 - math.cosh(tau) ** 2 / math.cosh((2 * ell + 1) * tau) ** 2) / (4 * math.sinh(tau) ** 2)
        assert energy(ModelKind.II, DeformedParams(A=1.0, tau=tau), ell) == pytest.approx(expected, rel=1e-12)

    def test_model_iii_negative_b(self):
        """Signed B lowers the levels below A l(l+1)."""
        value = energy(ModelKind.III, PUBLISHED_PARAMS[ModelKind.III], 2)
        assert value == pytest.approx(123.23, abs=0.01)
        assert value < 20.550 * 6

    def test_invalid_ell(self):
        with pytest.raises(DomainError):
            energy(ModelKind.I, PUBLISHED_PARAMS[ModelKind.I], -2)
        with pytest.raises(DomainError):
            energy(ModelKind.I, PUBLISHED_PARAMS[ModelKind.I], 1.5)

    def test_wrong_parameter_type(self):
        with pytest.raises(DomainError):
            energy(ModelKind.II, RotorParams(A=20.0, B=0.01), 2)

    @pytest.mark.parametrize("params", [
        DeformedParams(A=-1.0, tau=0.01),
        DeformedParams(A=20.0, tau=0.0),
    ])
    def test_invalid_deformed_params(self, params):
        with pytest.raises(DomainError):
            energy(ModelKind.IIPRIME, params, 2)

    def test_model_i_root_of_unity(self):
        """q^8 = 1 is reachable with l = 2 and is rejected."""
        with pytest.raises(DomainError):
            energy(ModelKind.I, DeformedParams(A=1.0, tau=math.pi / 4), 2)

    def test_model_iii_needs_positive_a(self):
        with pytest.raises(DomainError):
            energy(ModelKind.III, RotorParams(A=0.0, B=0.01), 2)

    def test_model_iv_square_root_domain(self):
        with pytest.raises(DomainError):
            energy(ModelKind.IV, HolmbergLipasParams(a=1000.0, b=-0.01), 18)

    def test_model_iv_small_b(self):
        """a (sqrt(1 + b x) - 1) -> (a b/2) x for small b x."""
        model = HolmbergLipasModel()
        value = model.energies(HolmbergLipasParams(a=1e8, b=1e-9), [2])[0]
        assert value == pytest.approx(0.5 * 1e8 * 1e-9 * 6, rel=1e-8)


class TestSpectrumTable:
    def test_single_level(self):
        table = spectrum_table(ModelKind.III, PUBLISHED_PARAMS[ModelKind.III], [2])
        assert len(table) == 1
        assert table[0][0] == 2
        assert table[0][1] == pytest.approx(123.23, abs=0.01)

    def test_empty(self):
        assert spectrum_table(ModelKind.II, PUBLISHED_PARAMS[ModelKind.II], []) == []

    def test_unsorted(self):
        with pytest.raises(DomainError, match="ascending"):
            spectrum_table(ModelKind.II, PUBLISHED_PARAMS[ModelKind.II], [4, 2])

    @pytest.mark.parametrize("kind", [ModelKind.I, ModelKind.IPRIME, ModelKind.IIPRIME, ModelKind.III])
    def test_published_parameters(self, kind):
        """Published parameters reproduce the published predictions to their rounding."""
        table = spectrum_table(kind, PUBLISHED_PARAMS[kind], HF_ELLS)
        assert [ell for ell, _ in table] == HF_ELLS
        np.testing.assert_allclose([e for _, e in table], PUBLISHED_LEVELS[kind], atol=0.15)

    def test_flag_string(self):
        table = spectrum_table("IIp", PUBLISHED_PARAMS[ModelKind.IIPRIME], [0, 2])
        assert table[0] == (0, 0.0)


class TestModelPairs:
    @staticmethod
    def _gap(exact, approx, params):
        ells = range(0, 19)
        e1 = np.array([e for _, e in spectrum_table(exact, params, ells)])
        e2 = np.array([e for _, e in spectrum_table(approx, params, ells)])
        return np.abs(e1 - e2)

    def test_sinus_tracks_su_q2(self):
        """The sinus formula stays within 0.1 cm^-1 of model I up to l = 9."""
        gap = self._gap(ModelKind.I, ModelKind.IPRIME, PUBLISHED_PARAMS[ModelKind.I])
        assert gap[:10].max() <= 0.1
        assert gap.max() <= 0.35
        assert np.all(np.diff(gap) >= 0)

    def test_tanh_tracks_tensor_operator(self):
        """The tanh formula stays within 0.1 cm^-1 of model II up to l = 12."""
        gap = self._gap(ModelKind.II, ModelKind.IIPRIME, PUBLISHED_PARAMS[ModelKind.II])
        assert gap[:13].max() <= 0.1
        assert gap.max() <= 0.2
