"""BEC non-Gaussianity experiment in a truncated single-mode Fock space.

A condensate mode starts in a coherent state.  Gravitational
self-interaction is either a quartic number-diagonal coupling
(lambda/2) n(n-1) -- the quantum case, which drives the state
non-Gaussian -- or a linear coupling lambda n -- the classical
mean-field case, which only rotates the coherent state and preserves
Gaussianity.  Non-Gaussianity is quantified by the entropy of the
moment-matched Gaussian state, computed from first and second moments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gie import C_LIGHT, G_NEWTON, HBAR

LEAKAGE_BOUND = 1e-8


def adequate_cutoff(alpha: complex) -> int:
    """Minimum Fock cutoff for a coherent amplitude: |a|^2 + 6|a| + 10."""
    a = abs(alpha)
    return math.ceil(a * a + 6 * a + 10)


@dataclass(frozen=True)
class BecConfig:
    """Parameters of one condensate evolution."""

    alpha: complex            # coherent amplitude
    coupling: float           # lambda, rad/s
    duration: float           # s
    cutoff: int               # N_max

    def __post_init__(self):
        if self.cutoff < adequate_cutoff(self.alpha):
            raise ValueError(
                f"cutoff {self.cutoff} below adequacy bound "
                f"{adequate_cutoff(self.alpha)} for |alpha| = {abs(self.alpha):.3g}")


@dataclass(frozen=True)
class FockState:
    """Normalized amplitudes over number states |0> .. |cutoff>."""

    cutoff: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        if amps.size != self.cutoff + 1:
            raise ValueError("amplitude length must be cutoff + 1")
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("zero state")
        amps = amps / norm
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def leakage(self) -> float:
        """Occupation of the top truncation level."""
        return float(np.abs(self.amplitudes[-1]) ** 2)


@dataclass(frozen=True)
class NonGaussianityReport:
    """First/second moments, symplectic eigenvalue, and the measure itself."""

    mean_a: complex
    mean_a2: complex
    mean_n: float
    nu: float
    delta_g: float  # nats


def coherent_state(alpha: complex, cutoff: int) -> FockState:
    """Truncated coherent state, renormalized after truncation."""
    if cutoff < adequate_cutoff(alpha):
        raise ValueError("cutoff too small for this amplitude")
    n = np.arange(cutoff + 1)
    log_fact = np.cumsum(np.concatenate([[0.0], np.log(np.arange(1, cutoff + 1))]))
    if alpha == 0:
        amps = np.zeros(cutoff + 1, dtype=complex)
        amps[0] = 1.0
    else:
        amps = np.exp(-abs(alpha) ** 2 / 2 + n * np.log(complex(alpha)) - log_fact / 2)
    return FockState(cutoff, amps)


def build_hamiltonians(lam: float, cutoff: int):
    """Diagonal Hamiltonians on the truncated mode, angular-frequency units.

    Quantum case: (lambda/2) n(n-1); classical case: lambda n.
    """
    n = np.arange(cutoff + 1, dtype=float)
    h_qg = np.diag(lam / 2 * n * (n - 1))
    h_cg = np.diag(lam * n)
    return h_qg, h_cg


def gaussian_coupling(m: float, sigma: float,
                      G: float = G_NEWTON, hbar: float = HBAR) -> float:
    """Self-interaction rate for an isotropic Gaussian density, rad/s.

    The double integral of |psi(r)|^2 |psi(r')|^2 / |r - r'| over a
    normalized Gaussian of standard deviation sigma closes to
    1/(sigma sqrt(pi)), giving lambda = -G m^2 / (hbar sqrt(pi) sigma).
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    return -G * m ** 2 / (hbar * math.sqrt(math.pi) * sigma)


def gaussian_coupling_monte_carlo(m: float, sigma: float, n_samples: int,
                                  seed: int, G: float = G_NEWTON,
                                  hbar: float = HBAR) -> float:
    """Monte-Carlo oracle for the coupling integral: sample the pair density."""
    rng = np.random.default_rng(seed)
    r1 = rng.normal(scale=sigma, size=(n_samples, 3))
    r2 = rng.normal(scale=sigma, size=(n_samples, 3))
    inv = 1.0 / np.linalg.norm(r1 - r2, axis=1)
    return -G * m ** 2 / hbar * float(np.mean(inv))


def evolve_bec(cfg: BecConfig, which: str) -> FockState:
    """Diagonal-phase evolution of the coherent state under QG or CG."""
    psi = coherent_state(cfg.alpha, cfg.cutoff)
    n = np.arange(cfg.cutoff + 1, dtype=float)
    if which == "QG":
        phases = cfg.coupling / 2 * n * (n - 1)
    elif which == "CG":
        phases = cfg.coupling * n
    else:
        raise ValueError("which must be 'QG' or 'CG'")
    out = FockState(cfg.cutoff, np.exp(-1j * phases * cfg.duration) * psi.amplitudes)
    if out.leakage >= LEAKAGE_BOUND:
        raise ValueError(f"truncation leakage {out.leakage:.2e} above bound")
    return out


def _gaussian_entropy(nu: float) -> float:
    """Von Neumann entropy of a thermal state with symplectic eigenvalue nu."""
    if nu <= 1.0:
        return 0.0
    p, q = (nu + 1) / 2, (nu - 1) / 2
    return p * math.log(p) - q * math.log(q)


def non_gaussianity(state: FockState) -> NonGaussianityReport:
    """Moment-matched Gaussian entropy as a non-Gaussianity measure.

    Quadratures x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)), so
    the vacuum covariance is I/2 and nu = 2 sqrt(det sigma) >= 1.  For a
    pure state this entropy equals the relative entropy to the closest
    Gaussian with the same moments.
    """
    amps = state.amplitudes
    n = np.arange(state.cutoff + 1, dtype=float)
    # <a>: sum over conj(c_{n-1}) sqrt(n) c_n
    a_mean = complex(np.sum(np.conj(amps[:-1]) * np.sqrt(n[1:]) * amps[1:]))
    a2_mean = complex(np.sum(np.conj(amps[:-2])
                             * np.sqrt(n[2:] * (n[2:] - 1)) * amps[2:]))
    n_mean = float(np.sum(n * np.abs(amps) ** 2))
    re, im = a_mean.real, a_mean.imag
    sxx = a2_mean.real + n_mean + 0.5 - 2 * re * re
    spp = -a2_mean.real + n_mean + 0.5 - 2 * im * im
    sxp = a2_mean.imag - 2 * re * im
    det = sxx * spp - sxp * sxp
    nu = 2.0 * math.sqrt(max(det, 0.0))
    return NonGaussianityReport(mean_a=a_mean, mean_a2=a2_mean, mean_n=n_mean,
                                nu=nu, delta_g=_gaussian_entropy(nu))


@dataclass(frozen=True)
class SnrIdentity:
    """The two dimensionless quantities compared by the scale identity."""

    ging_snr: float        # (c t / R) (m / M_P)^2
    gie_phase: float       # (c t / delta) (m / M_P)^2
    proper_time_shift: float  # sqrt(2/pi) G M t / (R c^2), s


def snr_identity(M: float, m: float, R: float, delta: float, t: float,
                 G: float = G_NEWTON, hbar: float = HBAR,
                 c: float = C_LIGHT) -> SnrIdentity:
    """Condensate signal-to-noise scale vs the two-body phase scale.

    Both are (c t / length) (m / M_P)^2; the only difference is whether
    the length is the condensate radius R or the pair separation delta,
    so they coincide when R = delta.
    """
    if min(M, m, R, delta, t) <= 0:
        raise ValueError("all inputs must be positive")
    planck_mass_sq = hbar * c / G
    ging = (c * t / R) * m ** 2 / planck_mass_sq
    gie = (c * t / delta) * m ** 2 / planck_mass_sq
    dtau = math.sqrt(2 / math.pi) * G * M * t / (R * c ** 2)
    return SnrIdentity(ging_snr=ging, gie_phase=gie, proper_time_shift=dtau)
