import numpy as np
import pytest

from tabletopqg import nogo
from tabletopqg.quantumcore import PureState, negativity, tensor_all


def plus():
    return PureState((2,), np.array([1, 1]) / np.sqrt(2))


class TestHamiltonianStructure:
    def test_blocks_must_be_hermitian(self):
        bad = np.array([[0, 1], [0, 0]], dtype=complex)
        eye = np.eye(2)
        with pytest.raises(ValueError):
            nogo.LocalHamiltonianSpec(bad, eye, eye, eye)

    def test_local_terms_commute(self):
        rng = np.random.default_rng(17)
        eye = np.eye(2, dtype=complex)
        for _ in range(100):
            spec = nogo.LocalHamiltonianSpec.random(rng)
            left = np.kron(nogo.h12(spec), eye)
            right = np.kron(eye, nogo.h23(spec))
            assert np.max(np.abs(left @ right - right @ left)) < 1e-12

    def test_bit_z_conserved(self):
        rng = np.random.default_rng(19)
        for _ in range(100):
            H = nogo.build_hamiltonian(nogo.LocalHamiltonianSpec.random(rng))
            comm = H @ nogo.BIT_Z - nogo.BIT_Z @ H
            assert np.max(np.abs(comm)) < 1e-12

    def test_hamiltonian_is_sum_of_parts(self):
        rng = np.random.default_rng(23)
        spec = nogo.LocalHamiltonianSpec.random(rng)
        eye = np.eye(2, dtype=complex)
        H = np.kron(nogo.h12(spec), eye) + np.kron(eye, nogo.h23(spec))
        assert np.allclose(H, nogo.build_hamiltonian(spec), atol=1e-14)


class TestDephasing:
    def test_idempotent(self):
        rng = np.random.default_rng(29)
        from tabletopqg.quantumcore import random_density_matrix
        rho = random_density_matrix((2, 2, 2), rng)
        once = nogo.dephase_bit(rho)
        twice = nogo.dephase_bit(once)
        assert np.allclose(once.entries, twice.entries, atol=1e-14)

    def test_preserves_allowed_expectations(self):
        rng = np.random.default_rng(31)
        from tabletopqg.quantumcore import random_density_matrix
        rho = random_density_matrix((2, 2, 2), rng)
        deph = nogo.dephase_bit(rho)
        assert nogo.bit_expectation(deph) == pytest.approx(
            nogo.bit_expectation(rho), abs=1e-12)

    def test_kills_bit_coherence(self):
        psi = tensor_all([plus(), plus(), plus()])
        deph = nogo.dephase_bit(psi.density_matrix())
        bit_x = np.kron(np.kron(np.eye(2), np.array([[0, 1], [1, 0]])), np.eye(2))
        assert abs(np.trace(deph.entries @ bit_x)) < 1e-12


class TestEvolveAndDephase:
    def test_identity_at_zero_time(self):
        rng = np.random.default_rng(37)
        spec = nogo.LocalHamiltonianSpec.random(rng)
        psi0 = nogo.random_product_state(rng)
        rho = nogo.evolve_and_dephase(spec, psi0, 0.0)
        expected = nogo.dephase_bit(psi0.density_matrix())
        assert np.allclose(rho.entries, expected.entries, atol=1e-12)

    def test_rejects_entangled_initial_state(self):
        bell_like = PureState((2, 2, 2),
                              np.array([1, 0, 0, 0, 0, 0, 0, 1]) / np.sqrt(2))
        spec = nogo.LocalHamiltonianSpec.random(np.random.default_rng(0))
        with pytest.raises(ValueError):
            nogo.evolve_and_dephase(spec, bell_like, 1.0)

    def test_bit_frozen(self):
        rng = np.random.default_rng(41)
        spec = nogo.LocalHamiltonianSpec.random(rng)
        psi0 = nogo.random_product_state(rng)
        z0 = nogo.bit_expectation(psi0.density_matrix())
        for t in (0.3, 1.0, 7.7):
            rho = nogo.evolve_and_dephase(spec, psi0, t)
            assert nogo.bit_expectation(rho) == pytest.approx(z0, abs=1e-10)


class TestSeparabilityVerification:
    def test_short_sweep_clean(self):
        report = nogo.verify_classical_separability(n_trials=60, seed=123)
        assert report.separable
        assert report.separability_violations == 0
        assert report.bit_drift_violations == 0
        assert report.worst_pt_eigenvalue >= -1e-10
        assert report.max_bit_drift <= 1e-10
        assert report.max_commutator_norm < 1e-12

    def test_deterministic_in_seed(self):
        a = nogo.verify_classical_separability(n_trials=5, seed=7)
        b = nogo.verify_classical_separability(n_trials=5, seed=7)
        assert a == b

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            nogo.verify_classical_separability(n_trials=0, seed=1)


class TestCounterexample:
    def test_hermitian(self):
        H = nogo.counterexample_hamiltonian(1.0)
        assert np.max(np.abs(H - H.conj().T)) < 1e-14

    def test_zero_coupling_stays_product(self):
        assert nogo.quantum_counterexample(0.0, 3.0) < 1e-12

    def test_entangles_qubits(self):
        assert nogo.quantum_counterexample(1.0, np.pi / 2) > 0.01

    def test_zeno_dephasing_removes_entanglement(self):
        coarse = nogo.classicalized_counterexample(1.0, np.pi / 2, 4)
        fine = nogo.classicalized_counterexample(1.0, np.pi / 2, 64)
        quantum = nogo.quantum_counterexample(1.0, np.pi / 2)
        assert fine < coarse + 1e-12
        assert fine < quantum / 10
        assert fine < 1e-3

    def test_local_terms_do_not_commute(self):
        # the entanglement requires the two couplings to clash on the bit
        eye = np.eye(2, dtype=complex)
        sz, sx = np.diag([1, -1]).astype(complex), np.array([[0, 1], [1, 0]],
                                                            dtype=complex)
        a = (sx + sz) / 2
        b = sz / 2
        h12 = np.kron(np.kron(a, eye), eye) + np.kron(np.kron(b, sz), eye)
        h23 = np.kron(np.kron(eye, eye), a) + np.kron(np.kron(eye, sx), b)
        assert np.max(np.abs(h12 @ h23 - h23 @ h12)) > 0.1
