"""Gravcat entanglement experiment under rival gravity models.

Two massive bodies, each in a superposition of two wavepacket locations,
accumulate branch-dependent phases from their mutual Newtonian
attraction.  The exact and short-time states, a mean-field
(Newton-Schrodinger) alternative that never entangles, a tripartite
model with an explicit gravitational mediator, the spin read-out
protocol, and a redshift rederivation of the same phase are all
provided.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .quantumcore import (
    DensityMatrix,
    PureState,
    chsh_max,
    negativity,
    partial_trace,
)

G_NEWTON = 6.67430e-11       # m^3 kg^-1 s^-2
HBAR = 1.054571817e-34       # J s
C_LIGHT = 299792458.0        # m/s


@dataclass(frozen=True)
class GravcatConfig:
    """Physical parameters of a symmetric gravcat pair.

    Packet centers sit at -D -/+ Delta (body 1) and +D +/- Delta (body 2),
    so the closest pair of packets is delta = 2(D - Delta) apart.
    Constants are injectable so natural-unit tests can set G = hbar = 1.
    """

    mass: float                # kg
    half_separation: float     # D, m
    packet_offset: float       # Delta, m
    duration: float            # t, s
    G: float = G_NEWTON
    hbar: float = HBAR
    c: float = C_LIGHT

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("mass must be positive")
        if not (0 < self.packet_offset < self.half_separation):
            raise ValueError("need 0 < Delta < D")
        if self.duration < 0:
            raise ValueError("duration must be non-negative")

    @property
    def delta(self) -> float:
        """Closest-packet separation 2(D - Delta)."""
        return 2.0 * (self.half_separation - self.packet_offset)


@dataclass(frozen=True)
class GieResult:
    """Witnesses extracted from a gravcat run."""

    theta: float
    negativity: float
    chsh: float | None = None


def branch_frequencies(cfg: GravcatConfig) -> np.ndarray:
    """Angular frequencies E_XY/hbar of the four branches (LL, LR, RL, RR).

    The pair potential is evaluated at the branch's packet separation:
    2D for LL and RR, 2D + 2Delta for LR, 2D - 2Delta for RL.
    """
    D, Dl = cfg.half_separation, cfg.packet_offset
    if cfg.delta == 0:
        raise ValueError("coincident packets (delta = 0) are singular")
    gm2 = cfg.G * cfg.mass ** 2 / cfg.hbar
    return np.array([
        gm2 / (2 * D),
        gm2 / (2 * D + 2 * Dl),
        gm2 / (2 * D - 2 * Dl),
        gm2 / (2 * D),
    ])


def exact_state(cfg: GravcatConfig) -> PureState:
    """Full four-branch state with unapproximated pair potentials."""
    phases = np.exp(-1j * branch_frequencies(cfg) * cfg.duration)
    return PureState((2, 2), phases / 2.0)


def phase_rate(cfg: GravcatConfig) -> float:
    """Relative-phase accumulation rate G m^2 / (hbar delta), rad/s."""
    return cfg.G * cfg.mass ** 2 / (cfg.hbar * cfg.delta)


def relative_phase(cfg: GravcatConfig) -> float:
    """Short-time relative phase theta = -G m^2 t / (hbar delta)."""
    return -phase_rate(cfg) * cfg.duration


def state_from_theta(theta: float) -> PureState:
    """(|LL> + |LR> + e^{i theta}|RL> + |RR>)/2."""
    return PureState((2, 2), np.array([1, 1, np.exp(1j * theta), 1]) / 2.0)


def approx_state(cfg: GravcatConfig) -> PureState:
    """Short-time state: only the closest pair's phase survives."""
    return state_from_theta(relative_phase(cfg))


def newton_schrodinger_state(cfg: GravcatConfig) -> PureState:
    """Mean-field evolution: each body feels the other's 50/50 mass split.

    The potential is then one-body, the evolution factorizes, and the
    final state is an exact product with zero entanglement.
    """
    if cfg.delta == 0:
        raise ValueError("coincident packets (delta = 0) are singular")
    D, Dl = cfg.half_separation, cfg.packet_offset
    half = cfg.G * cfg.mass ** 2 / (2 * cfg.hbar)
    # distances from each packet of body 1 to the two packets of body 2
    v_L = -half * (1 / (2 * D) + 1 / (2 * D + 2 * Dl))
    v_R = -half * (1 / (2 * D - 2 * Dl) + 1 / (2 * D))
    single = PureState((2,), np.array([
        np.exp(-1j * v_L * cfg.duration),
        np.exp(-1j * v_R * cfg.duration),
    ]) / np.sqrt(2))
    # the setup is mirror-symmetric, so body 2 sees the same potentials
    from .quantumcore import tensor
    return tensor(single, single)


def mediator_vectors(eta: float) -> np.ndarray:
    """Four unit vectors in C^4 with uniform pairwise overlap eta.

    Built as columns of the symmetric square root of the Gram matrix
    (1 - eta) I + eta J, positive semidefinite for eta in [-1/3, 1].
    """
    if not (-1 / 3 - 1e-12 <= eta <= 1 + 1e-12):
        raise ValueError("mediator overlap eta must lie in [-1/3, 1]")
    gram = (1 - eta) * np.eye(4) + eta * np.ones((4, 4))
    # eigendecomposition square root: stable at the rank-deficient endpoints
    evals, evecs = np.linalg.eigh(gram)
    root = evecs @ np.diag(np.sqrt(np.clip(evals, 0.0, None))) @ evecs.T
    return np.asarray(root, dtype=complex)


def tripartite_state(cfg: GravcatConfig, eta: float):
    """Gravcat (x) mediator (x) gravcat state with overlap-eta mediators.

    Returns the full density matrix over dims (2, 4, 2) and the reduced
    gravcat-gravcat state obtained by tracing out the mediator.
    """
    theta = relative_phase(cfg)
    branch = np.array([1, 1, np.exp(1j * theta), 1]) / 2.0
    med = mediator_vectors(eta)
    amps = np.zeros(2 * 4 * 2, dtype=complex)
    for k, (x, y) in enumerate([(0, 0), (0, 1), (1, 0), (1, 1)]):
        for g in range(4):
            amps[x * 8 + g * 2 + y] += branch[k] * med[g, k]
    full = PureState((2, 4, 2), amps).density_matrix()
    reduced = partial_trace(full, keep=[0, 2])
    return full, reduced


def spin_protocol_state(cfg: GravcatConfig) -> PureState:
    """Spin-spin state after mapping packet labels back onto spins.

    Position and mediator factors are common to all branches at read-out
    and drop out; the surviving state carries the same relative phase.
    """
    return state_from_theta(relative_phase(cfg))


def redshift_phase(cfg: GravcatConfig, body_radius: float) -> float:
    """Separation-dependent phase from proper-time dilation, rad.

    Proper time along a gravcat worldline at separation delta from its
    partner is T (1 - Gm/Rc^2 - Gm/delta c^2); the R self-term is common
    to all branches and discarded, leaving (m c^2/hbar)(G m/delta c^2) T.
    """
    if cfg.delta <= body_radius:
        raise ValueError("redshift expansion requires delta >> body radius")
    return (cfg.G * cfg.mass ** 2 / (cfg.delta * cfg.c ** 2)) \
        * cfg.c ** 2 * cfg.duration / cfg.hbar


def negativity_at_theta(theta: float) -> float:
    """Gravcat-gravcat negativity of the short-time state at phase theta."""
    return negativity(state_from_theta(theta))


def onset_time(cfg: GravcatConfig, threshold: float) -> float:
    """Smallest t > 0 where the short-time state's negativity reaches threshold.

    Negativity grows monotonically with |theta| on (0, pi); bisect there.
    """
    if not (0 < threshold <= 0.5):
        raise ValueError("threshold must lie in (0, 0.5]")
    rate = phase_rate(cfg)
    t_max = np.pi / rate
    if threshold == 0.5:
        return t_max

    def f(t):
        return negativity_at_theta(-rate * t) - threshold

    return brentq(f, 1e-30, t_max, xtol=1e-18, rtol=1e-14)


def run_experiment(cfg: GravcatConfig, chsh_restarts: int = 8) -> GieResult:
    """Evaluate the short-time state's witnesses for a configuration."""
    theta = relative_phase(cfg)
    neg = negativity_at_theta(theta)
    chsh = chsh_max(spin_protocol_state(cfg), restarts=chsh_restarts)
    return GieResult(theta=theta, negativity=neg, chsh=chsh)
