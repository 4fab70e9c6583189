"""Finite-dimensional multipartite quantum mechanics.

States live over an explicit list of subsystem dimensions.  Everything
here is a pure function over immutable value objects; randomness, where
needed, is passed in as an explicit ``numpy.random.Generator``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

HERMITICITY_TOL = 1e-10
NORM_TOL = 1e-12
PSD_TOL = 1e-10

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def sigma(axis: str) -> np.ndarray:
    """Pauli matrix along 'x', 'y' or 'z'."""
    return _PAULI[axis].copy()


@dataclass(frozen=True)
class PureState:
    """Normalized state vector over subsystems of dimensions ``dims``."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if any(d < 2 for d in dims):
            raise ValueError(f"subsystem dimensions must be >= 2, got {dims}")
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        if amps.size != int(np.prod(dims)):
            raise ValueError(
                f"amplitude length {amps.size} inconsistent with dims {dims}"
            )
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("zero state vector")
        amps = amps / norm
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(self.dims, np.outer(self.amplitudes, self.amplitudes.conj()))

    @staticmethod
    def basis(dims, index: int) -> "PureState":
        """Computational basis state |index> over the given dims."""
        amps = np.zeros(int(np.prod(dims)), dtype=complex)
        amps[index] = 1.0
        return PureState(tuple(dims), amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix over ``dims``."""

    dims: tuple[int, ...]
    entries: np.ndarray
    herm_tol: float = field(default=HERMITICITY_TOL, compare=False)
    psd_tol: float = field(default=PSD_TOL, compare=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        mat = np.asarray(self.entries, dtype=complex)
        n = int(np.prod(dims))
        if mat.shape != (n, n):
            raise ValueError(f"matrix shape {mat.shape} inconsistent with dims {dims}")
        if np.max(np.abs(mat - mat.conj().T)) > self.herm_tol:
            raise ValueError("density matrix is not Hermitian within tolerance")
        tr = np.trace(mat).real
        if abs(tr - 1.0) > NORM_TOL:
            mat = mat / tr
        lo = np.linalg.eigvalsh(mat)[0]
        if lo < -self.psd_tol:
            raise ValueError(f"density matrix has eigenvalue {lo} below -{self.psd_tol}")
        mat.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Singular-value form of a pure bipartite state.

    coefficients are non-negative and descending; their squares sum to 1.
    left/right basis vectors are stored as matrix columns.
    """

    coefficients: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray

    @property
    def rank(self) -> int:
        return int(np.sum(self.coefficients > 1e-12))


def _as_density(state) -> DensityMatrix:
    if isinstance(state, PureState):
        return state.density_matrix()
    return state


def tensor(a: PureState, b: PureState) -> PureState:
    """Kronecker product of two pure states; dims concatenate."""
    return PureState(a.dims + b.dims, np.kron(a.amplitudes, b.amplitudes))


def tensor_all(states) -> PureState:
    out = states[0]
    for s in states[1:]:
        out = tensor(out, s)
    return out


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Reduce a multipartite density matrix to the subsystems in ``keep``.

    ``keep`` is an iterable of subsystem indices; their order in the
    output follows their order in ``rho.dims``.
    """
    keep = sorted(set(int(k) for k in keep))
    n = len(rho.dims)
    if any(k < 0 or k >= n for k in keep):
        raise IndexError(f"subsystem index out of range for dims {rho.dims}")
    traced = [i for i in range(n) if i not in keep]
    tens = rho.entries.reshape(rho.dims + rho.dims)
    for i in sorted(traced, reverse=True):
        tens = np.trace(tens, axis1=i, axis2=i + tens.ndim // 2)
    d = int(np.prod([rho.dims[k] for k in keep])) if keep else 1
    out = tens.reshape(d, d)
    return DensityMatrix(tuple(rho.dims[k] for k in keep), out)


def partial_transpose(rho: DensityMatrix, subsystem: int = 1) -> np.ndarray:
    """Partial transpose on one factor of a bipartite density matrix."""
    if len(rho.dims) != 2:
        raise ValueError(f"partial transpose needs bipartite dims, got {rho.dims}")
    d0, d1 = rho.dims
    tens = rho.entries.reshape(d0, d1, d0, d1)
    if subsystem == 0:
        tens = tens.transpose(2, 1, 0, 3)
    elif subsystem == 1:
        tens = tens.transpose(0, 3, 2, 1)
    else:
        raise IndexError("subsystem must be 0 or 1")
    return tens.reshape(d0 * d1, d0 * d1)


def negativity(state, cut: int = 1) -> float:
    """Sum of |negative eigenvalues| of the partial transpose.

    ``state`` may be a PureState or DensityMatrix over two subsystems
    (multipartite pure states are first grouped at ``cut``).  Zero iff
    separable for 2x2 systems.
    """
    rho = _as_density(state)
    if len(rho.dims) != 2:
        dl = int(np.prod(rho.dims[:cut]))
        dr = int(np.prod(rho.dims[cut:]))
        rho = DensityMatrix((dl, dr), rho.entries)
    evals = np.linalg.eigvalsh(partial_transpose(rho, 1))
    return float(-np.sum(evals[evals < 0]))


def min_pt_eigenvalue(state) -> float:
    """Smallest eigenvalue of the partial transpose (PPT diagnostic)."""
    rho = _as_density(state)
    return float(np.linalg.eigvalsh(partial_transpose(rho, 1))[0])


def is_separable_two_qubit(rho, tol: float = 1e-10) -> bool:
    """PPT test; necessary and sufficient for 2x2 systems."""
    rho = _as_density(rho)
    if rho.dims != (2, 2):
        raise ValueError(f"two-qubit test requires dims (2, 2), got {rho.dims}")
    return min_pt_eigenvalue(rho) >= -tol


def schmidt(psi: PureState, cut: int = 1) -> SchmidtDecomposition:
    """Schmidt decomposition of a pure state across subsystems [0:cut) | [cut:)."""
    dl = int(np.prod(psi.dims[:cut]))
    dr = int(np.prod(psi.dims[cut:]))
    mat = psi.amplitudes.reshape(dl, dr)
    u, s, vh = np.linalg.svd(mat)
    k = min(dl, dr)
    return SchmidtDecomposition(s[:k], u[:, :k], vh[:k, :].conj().T)


def diag_phase_evolve(psi: PureState, energies, t: float) -> PureState:
    """Evolve under a diagonal Hamiltonian: amp_k -> exp(-i E_k t) amp_k.

    ``energies`` are angular frequencies (E / hbar).
    """
    energies = np.asarray(energies, dtype=float)
    if energies.size != psi.dim:
        raise ValueError("energies length does not match state dimension")
    return PureState(psi.dims, np.exp(-1j * energies * t) * psi.amplitudes)


def hamiltonian_evolve(psi: PureState, H: np.ndarray, t: float,
                       herm_tol: float = HERMITICITY_TOL) -> PureState:
    """Evolve a state by exp(-iHt) via Hermitian eigendecomposition."""
    H = np.asarray(H, dtype=complex)
    if np.max(np.abs(H - H.conj().T)) > herm_tol:
        raise ValueError("Hamiltonian is not Hermitian within tolerance")
    evals, evecs = np.linalg.eigh(H)
    phases = np.exp(-1j * evals * t)
    amps = evecs @ (phases * (evecs.conj().T @ psi.amplitudes))
    return PureState(psi.dims, amps)


def correlation_matrix(rho) -> np.ndarray:
    """3x3 matrix T_ij = Tr[rho sigma_i x sigma_j] of a two-qubit state."""
    rho = _as_density(rho)
    if rho.dims != (2, 2):
        raise ValueError(f"correlation matrix requires dims (2, 2), got {rho.dims}")
    T = np.empty((3, 3))
    for i, si in enumerate("xyz"):
        for j, sj in enumerate("xyz"):
            T[i, j] = np.trace(rho.entries @ np.kron(_PAULI[si], _PAULI[sj])).real
    return T


def chsh_tmatrix_bound(rho) -> float:
    """Closed-form CHSH maximum 2*sqrt(s1^2 + s2^2) from the correlation matrix."""
    s = np.linalg.svd(correlation_matrix(rho), compute_uv=False)
    return float(2.0 * np.sqrt(s[0] ** 2 + s[1] ** 2))


def _unit(theta, phi):
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def chsh_max(rho, restarts: int = 32, rng=None) -> float:
    """Maximum CHSH value over local measurement directions.

    Optimizes over Bob's two directions (Alice's optimal directions align
    with T(b+b') and T(b-b')); seeded random restarts plus a start taken
    from the singular vectors of the correlation matrix.
    """
    rho = _as_density(rho)
    T = correlation_matrix(rho)
    if rng is None:
        rng = np.random.default_rng(0)

    def neg_value(x):
        b = _unit(x[0], x[1])
        bp = _unit(x[2], x[3])
        return -(np.linalg.norm(T @ (b + bp)) + np.linalg.norm(T @ (b - bp)))

    # informed start: b +/- b' along the top-2 right singular directions
    _, _, vh = np.linalg.svd(T)
    v1, v2 = vh[0], vh[1]
    b0 = (v1 + v2) / np.linalg.norm(v1 + v2)
    b1 = (v1 - v2) / np.linalg.norm(v1 - v2)

    def angles(v):
        return [np.arccos(np.clip(v[2], -1, 1)), np.arctan2(v[1], v[0])]

    starts = [np.array(angles(b0) + angles(b1))]
    for _ in range(max(0, restarts - 1)):
        starts.append(rng.uniform([0, -np.pi, 0, -np.pi], [np.pi, np.pi, np.pi, np.pi]))

    best = 0.0
    for x0 in starts:
        res = minimize(neg_value, x0, method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 2000})
        best = max(best, -res.fun)
    return best


def random_pure_state(dims, rng) -> PureState:
    """Haar-ish random pure state from complex normal amplitudes."""
    n = int(np.prod(dims))
    amps = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState(tuple(dims), amps)


def random_density_matrix(dims, rng, rank: int | None = None) -> DensityMatrix:
    """Random mixed state from a partial-traced random pure state recipe."""
    n = int(np.prod(dims))
    rank = rank or n
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    mat = g @ g.conj().T
    return DensityMatrix(tuple(dims), mat / np.trace(mat).real)


def random_hermitian(n: int, rng) -> np.ndarray:
    """GUE-style random Hermitian matrix scaled to unit spectral norm."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = (g + g.conj().T) / 2
    return h / max(np.max(np.abs(np.linalg.eigvalsh(h))), 1e-300)
