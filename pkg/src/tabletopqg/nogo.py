"""Classical-mediator no-go theorem, verified numerically.

Two qubits interact only with a middle two-level system whose sole
observables are the identity and sigma_z -- a classical bit.  Under the
resulting superselection rule the qubit-qubit reduction stays separable
for all times and the bit never moves.  Breaking the rule (coupling the
qubits to sigma_x of the mediator) produces entanglement, which is the
contrapositive: entangled qubits imply a non-classical mediator.

Internally hbar = 1; Hamiltonian blocks are dimensionless energies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .quantumcore import (
    DensityMatrix,
    PureState,
    hamiltonian_evolve,
    min_pt_eigenvalue,
    negativity,
    partial_trace,
    random_hermitian,
    sigma,
    tensor_all,
)

_I2 = np.eye(2, dtype=complex)
_SZ = sigma("z")
_SX = sigma("x")
BIT_Z = np.kron(np.kron(_I2, _SZ), _I2)


def _check_hermitian(name: str, m: np.ndarray, tol: float = 1e-12):
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"block {name} must be 2x2")
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise ValueError(f"block {name} is not Hermitian within {tol}")
    return m


@dataclass(frozen=True)
class LocalHamiltonianSpec:
    """Hermitian 2x2 blocks of the local qubit-bit-qubit Hamiltonian.

    H_12 = A (x) I + B (x) sigma_z on (qubit1, bit);
    H_23 = I (x) C + sigma_z (x) D on (bit, qubit2).
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray

    def __post_init__(self):
        for name in "ABCD":
            m = _check_hermitian(name, getattr(self, name))
            m.setflags(write=False)
            object.__setattr__(self, name, m)

    @staticmethod
    def random(rng) -> "LocalHamiltonianSpec":
        return LocalHamiltonianSpec(*(random_hermitian(2, rng) for _ in range(4)))


@dataclass
class NogoReport:
    """Aggregate of a separability verification sweep."""

    n_trials: int
    separability_violations: int
    bit_drift_violations: int
    worst_pt_eigenvalue: float
    max_bit_drift: float
    max_commutator_norm: float

    @property
    def separable(self) -> bool:
        return self.separability_violations == 0


def h12(spec: LocalHamiltonianSpec) -> np.ndarray:
    return np.kron(spec.A, _I2) + np.kron(spec.B, _SZ)


def h23(spec: LocalHamiltonianSpec) -> np.ndarray:
    return np.kron(_I2, spec.C) + np.kron(_SZ, spec.D)


def build_hamiltonian(spec: LocalHamiltonianSpec) -> np.ndarray:
    """Assemble the 8x8 Hamiltonian H_12 (x) I + I (x) H_23."""
    return np.kron(h12(spec), _I2) + np.kron(_I2, h23(spec))


def dephase_bit(rho: DensityMatrix) -> DensityMatrix:
    """Project out bit coherences in the sigma_z basis (subsystem 1)."""
    out = np.zeros_like(rho.entries)
    for j in range(2):
        p = np.zeros((2, 2))
        p[j, j] = 1.0
        proj = np.kron(np.kron(_I2, p), _I2)
        out += proj @ rho.entries @ proj
    return DensityMatrix(rho.dims, out)


def evolve_and_dephase(spec: LocalHamiltonianSpec, psi0: PureState,
                       t: float) -> DensityMatrix:
    """Evolve a product state under H, then apply the bit superselection.

    The dephased mixture has the same expectation value as the pure
    evolved state for every observable the superselection rule allows.
    """
    if psi0.dims != (2, 2, 2):
        raise ValueError("initial state must have dims (2, 2, 2)")
    if not _is_product(psi0):
        raise ValueError("theorem hypothesis: the initial state must be a product")
    psi_t = hamiltonian_evolve(psi0, build_hamiltonian(spec), t)
    return dephase_bit(psi_t.density_matrix())


def _is_product(psi: PureState, tol: float = 1e-10) -> bool:
    from .quantumcore import schmidt
    for cut in (1, 2):
        s = schmidt(PureState(psi.dims, psi.amplitudes), cut)
        if np.sum(s.coefficients > tol ** 0.5) > 1:
            return False
    return True


def bit_expectation(rho: DensityMatrix) -> float:
    """<sigma_z> of the mediating bit."""
    return float(np.trace(rho.entries @ BIT_Z).real)


def qubit_reduction(rho: DensityMatrix) -> DensityMatrix:
    return partial_trace(rho, keep=[0, 2])


def random_product_state(rng) -> PureState:
    from .quantumcore import random_pure_state
    return tensor_all([random_pure_state((2,), rng) for _ in range(3)])


def verify_classical_separability(n_trials: int, seed: int,
                                  n_times: int = 16,
                                  t_max: float = 10.0) -> NogoReport:
    """Sweep random specs, product states, and times; report worst cases.

    Failures are counted, not raised: min partial-transpose eigenvalue
    below -1e-10 counts as a separability violation, bit expectation
    drift above 1e-10 as a frozen-bit violation.
    """
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    rng = np.random.default_rng(seed)
    worst_pt = np.inf
    max_drift = 0.0
    max_comm = 0.0
    sep_viol = 0
    drift_viol = 0
    for _ in range(n_trials):
        spec = LocalHamiltonianSpec.random(rng)
        psi0 = random_product_state(rng)
        comm = np.kron(h12(spec), _I2) @ np.kron(_I2, h23(spec)) \
            - np.kron(_I2, h23(spec)) @ np.kron(h12(spec), _I2)
        max_comm = max(max_comm, float(np.max(np.abs(comm))))
        z0 = bit_expectation(psi0.density_matrix())
        times = rng.uniform(0.0, t_max, size=n_times)
        for t in times:
            rho = evolve_and_dephase(spec, psi0, t)
            lo = min_pt_eigenvalue(qubit_reduction(rho))
            worst_pt = min(worst_pt, lo)
            if lo < -1e-10:
                sep_viol += 1
            drift = abs(bit_expectation(rho) - z0)
            max_drift = max(max_drift, drift)
            if drift > 1e-10:
                drift_viol += 1
    return NogoReport(
        n_trials=n_trials,
        separability_violations=sep_viol,
        bit_drift_violations=drift_viol,
        worst_pt_eigenvalue=float(worst_pt),
        max_bit_drift=float(max_drift),
        max_commutator_norm=float(max_comm),
    )


def counterexample_hamiltonian(g: float) -> np.ndarray:
    """Second coupling moved to sigma_x of the mediator: no superselection.

    B = D = g sigma_z / 2, A = C = g (sigma_x + sigma_z) / 2.  The first
    qubit couples via the bit's sigma_z, the second via its sigma_x, so
    the two local terms no longer commute and the mediator can carry
    quantum correlations.  The local fields A and C are needed: with
    bare couplings the branch overlaps split additively (the per-branch
    bit Hamiltonian squares to a multiple of identity) and the
    qubit-qubit reduction stays separable for all times.
    """
    a = g * (_SX + _SZ) / 2
    b = g * _SZ / 2
    return (np.kron(np.kron(a, _I2), _I2) + np.kron(np.kron(b, _SZ), _I2)
            + np.kron(np.kron(_I2, _I2), a) + np.kron(np.kron(_I2, _SX), b))


def quantum_counterexample(g: float, t: float) -> float:
    """Qubit-qubit negativity after evolving |+>|0>|+> without dephasing."""
    plus = PureState((2,), np.array([1, 1]) / np.sqrt(2))
    zero = PureState.basis((2,), 0)
    psi0 = tensor_all([plus, zero, plus])
    psi_t = hamiltonian_evolve(psi0, counterexample_hamiltonian(g), t)
    return negativity(qubit_reduction(psi_t.density_matrix()))


def classicalized_counterexample(g: float, t: float, n_steps: int) -> float:
    """Same Hamiltonian but with bit dephasing after each small step.

    Frequent dephasing restores effective classicality of the mediator:
    the qubit-qubit negativity tends to zero as the step size shrinks.
    """
    H = counterexample_hamiltonian(g)
    evals, evecs = np.linalg.eigh(H)
    u = evecs @ np.diag(np.exp(-1j * evals * t / n_steps)) @ evecs.conj().T
    plus = PureState((2,), np.array([1, 1]) / np.sqrt(2))
    zero = PureState.basis((2,), 0)
    rho = tensor_all([plus, zero, plus]).density_matrix()
    mat = rho.entries
    for _ in range(n_steps):
        mat = u @ mat @ u.conj().T
        mat = dephase_bit(DensityMatrix((2, 2, 2), mat)).entries
    return negativity(qubit_reduction(DensityMatrix((2, 2, 2), mat)))
