import math

import numpy as np
import pytest

from tabletopqg import ging
from tabletopqg.ging import BecConfig, FockState


def fock(n, cutoff=40):
    amps = np.zeros(cutoff + 1, dtype=complex)
    amps[n] = 1.0
    return FockState(cutoff, amps)


class TestCoherentState:
    def test_vacuum(self):
        psi = ging.coherent_state(0.0, 12)
        assert abs(psi.amplitudes[0] - 1) < 1e-15
        assert np.all(np.abs(psi.amplitudes[1:]) == 0)

    def test_mean_occupation(self):
        for alpha in (0.5, 1.0, 2.0, 1 + 1j):
            psi = ging.coherent_state(alpha, ging.adequate_cutoff(alpha) + 5)
            rep = ging.non_gaussianity(psi)
            assert rep.mean_n == pytest.approx(abs(alpha) ** 2, abs=1e-8)
            assert rep.mean_a == pytest.approx(alpha, abs=1e-8)

    def test_is_gaussian(self):
        rep = ging.non_gaussianity(ging.coherent_state(2.0, 40))
        assert rep.nu == pytest.approx(1.0, abs=1e-9)
        assert rep.delta_g <= 1e-9

    def test_cutoff_guard(self):
        with pytest.raises(ValueError):
            ging.coherent_state(2.0, 5)

    def test_adequate_cutoff_formula(self):
        assert ging.adequate_cutoff(0.0) == 10
        assert ging.adequate_cutoff(2.0) == 26


class TestHamiltonians:
    def test_quartic_kills_vacuum_and_single(self):
        h_qg, _ = ging.build_hamiltonians(0.7, 10)
        assert h_qg[0, 0] == 0.0
        assert h_qg[1, 1] == 0.0
        assert h_qg[3, 3] == pytest.approx(0.7 / 2 * 3 * 2, abs=1e-14)

    def test_linear_spectrum(self):
        _, h_cg = ging.build_hamiltonians(0.7, 10)
        assert np.allclose(np.diag(h_cg), 0.7 * np.arange(11), atol=1e-14)


class TestCoupling:
    def test_closed_form_value(self):
        lam = ging.gaussian_coupling(1e-14, 1e-6)
        expected = -ging.G_NEWTON * 1e-28 / (ging.HBAR * math.sqrt(math.pi) * 1e-6)
        assert lam == pytest.approx(expected, rel=1e-14)
        assert lam < 0

    def test_monte_carlo_oracle_agrees(self):
        closed = ging.gaussian_coupling(1e-14, 1e-6)
        mc = ging.gaussian_coupling_monte_carlo(1e-14, 1e-6, 400000, seed=77)
        assert mc == pytest.approx(closed, rel=0.01)

    def test_scaling(self):
        base = ging.gaussian_coupling(1.0, 1.0, G=1.0, hbar=1.0)
        assert ging.gaussian_coupling(2.0, 1.0, G=1.0, hbar=1.0) == pytest.approx(
            4 * base, rel=1e-12)
        assert ging.gaussian_coupling(1.0, 2.0, G=1.0, hbar=1.0) == pytest.approx(
            base / 2, rel=1e-12)

    def test_rejects_bad_sigma(self):
        with pytest.raises(ValueError):
            ging.gaussian_coupling(1.0, 0.0)


class TestEvolution:
    def test_classical_case_stays_gaussian(self):
        rng = np.random.default_rng(888)
        for _ in range(50):
            alpha = rng.uniform(0.3, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            cfg = BecConfig(alpha=complex(alpha), coupling=float(rng.uniform(-2, 2)),
                            duration=float(rng.uniform(0, 10)), cutoff=40)
            out = ging.evolve_bec(cfg, "CG")
            assert ging.non_gaussianity(out).delta_g <= 1e-9

    def test_classical_case_rotates_amplitude(self):
        cfg = BecConfig(alpha=1.5, coupling=0.8, duration=2.0, cutoff=40)
        rep = ging.non_gaussianity(ging.evolve_bec(cfg, "CG"))
        assert rep.mean_a == pytest.approx(1.5 * np.exp(-1j * 0.8 * 2.0), abs=1e-8)

    def test_quantum_case_goes_nongaussian(self):
        cfg = BecConfig(alpha=2.0, coupling=1.0, duration=0.5, cutoff=40)
        assert ging.non_gaussianity(ging.evolve_bec(cfg, "QG")).delta_g > 0.01

    def test_kerr_revival(self):
        cfg = BecConfig(alpha=2.0, coupling=1.0, duration=2 * np.pi, cutoff=40)
        assert ging.non_gaussianity(ging.evolve_bec(cfg, "QG")).delta_g <= 1e-6

    def test_truncation_robustness(self):
        a = BecConfig(alpha=2.0, coupling=1.0, duration=0.5, cutoff=40)
        b = BecConfig(alpha=2.0, coupling=1.0, duration=0.5, cutoff=80)
        da = ging.non_gaussianity(ging.evolve_bec(a, "QG")).delta_g
        db = ging.non_gaussianity(ging.evolve_bec(b, "QG")).delta_g
        assert da == pytest.approx(db, abs=1e-6)

    def test_rejects_unknown_model(self):
        cfg = BecConfig(alpha=1.0, coupling=1.0, duration=1.0, cutoff=40)
        with pytest.raises(ValueError):
            ging.evolve_bec(cfg, "XX")

    def test_cutoff_adequacy_enforced(self):
        with pytest.raises(ValueError):
            BecConfig(alpha=3.0, coupling=1.0, duration=1.0, cutoff=12)


class TestNonGaussianity:
    def test_single_photon(self):
        rep = ging.non_gaussianity(fock(1))
        assert rep.nu == pytest.approx(3.0, abs=1e-12)
        assert rep.delta_g == pytest.approx(2 * math.log(2), abs=1e-12)

    def test_number_states_increase(self):
        vals = [ging.non_gaussianity(fock(n)).delta_g for n in range(4)]
        assert vals[0] <= 1e-12
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_nu_at_least_one(self):
        rng = np.random.default_rng(101)
        for _ in range(50):
            amps = rng.normal(size=16) + 1j * rng.normal(size=16)
            rep = ging.non_gaussianity(FockState(15, amps))
            assert rep.nu >= 1.0 - 1e-9

    def test_phase_rotation_invariance(self):
        psi = ging.evolve_bec(BecConfig(alpha=2.0, coupling=1.0, duration=0.5,
                                        cutoff=40), "QG")
        n = np.arange(41)
        rotated = FockState(40, np.exp(-1j * 0.9 * n) * psi.amplitudes)
        assert ging.non_gaussianity(rotated).delta_g == pytest.approx(
            ging.non_gaussianity(psi).delta_g, abs=1e-9)

    def test_leakage_guard(self):
        big = BecConfig(alpha=3.5, coupling=1.0, duration=1.0,
                        cutoff=ging.adequate_cutoff(3.5))
        ging.evolve_bec(big, "QG")  # adequacy bound keeps leakage tiny
        tight = FockState(3, np.ones(4, dtype=complex))
        assert tight.leakage > ging.LEAKAGE_BOUND


class TestSnrIdentity:
    def test_equality_at_matching_lengths(self):
        out = ging.snr_identity(M=1e-10, m=1e-14, R=1e-4, delta=1e-4, t=1.0)
        assert out.ging_snr == pytest.approx(out.gie_phase, rel=1e-12)

    def test_length_ratio(self):
        out = ging.snr_identity(M=1e-10, m=1e-14, R=2e-4, delta=1e-4, t=1.0)
        assert out.gie_phase == pytest.approx(2 * out.ging_snr, rel=1e-12)

    def test_proper_time_shift(self):
        out = ging.snr_identity(M=1e-10, m=1e-14, R=1e-4, delta=1e-4, t=1.0)
        expected = math.sqrt(2 / math.pi) * ging.G_NEWTON * 1e-10 \
            / (1e-4 * ging.C_LIGHT ** 2)
        assert out.proper_time_shift == pytest.approx(expected, rel=1e-12)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ging.snr_identity(M=0.0, m=1.0, R=1.0, delta=1.0, t=1.0)
