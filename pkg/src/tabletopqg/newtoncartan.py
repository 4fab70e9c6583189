"""Geometrized-Newtonian phase for a gravcat branch.

The branch in which the two bodies are closest surveys a slightly
different connection than the lab average; the work needed to hold the
body on its lab-average worldline integrates to a total energy
m * (phi' - phi) * T when the potential difference is static, and the
corresponding phase is that energy times T over hbar -- the same number
as the direct Newtonian and redshift derivations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson, trapezoid

from .gie import HBAR


@dataclass(frozen=True)
class PotentialDifference:
    """Potential gap phi' - phi, J/kg: a constant or time samples."""

    constant: float | None = None
    times: np.ndarray | None = None
    samples: np.ndarray | None = None

    def __post_init__(self):
        if self.constant is None:
            t = np.asarray(self.times, dtype=float)
            s = np.asarray(self.samples, dtype=float)
            if t.size != s.size or t.size < 2:
                raise ValueError("need matching time/sample arrays of length >= 2")
            if np.any(np.diff(t) <= 0):
                raise ValueError("timestamps must be strictly increasing")
            if not np.all(np.isfinite(s)):
                raise ValueError("samples must be finite")
            t.setflags(write=False)
            s.setflags(write=False)
            object.__setattr__(self, "times", t)
            object.__setattr__(self, "samples", s)


@dataclass(frozen=True)
class NcPhaseReport:
    """Energy and phase of the errant-geometry branch."""

    total_energy: float     # J
    phase: float            # rad
    comparison_phase: float | None = None  # rad, from the two-body model


def static_differential_phase(m: float, delta_phi: float, T: float,
                              hbar: float = HBAR,
                              comparison_phase: float | None = None) -> NcPhaseReport:
    """Closed form for a time-translation-symmetric potential difference."""
    energy = m * delta_phi
    return NcPhaseReport(total_energy=energy, phase=energy * T / hbar,
                         comparison_phase=comparison_phase)


def gravcat_potential_difference(m: float, delta_near: float,
                                 delta_far: float = np.inf,
                                 G: float | None = None) -> float:
    """Potential gap G m (1/delta_near - 1/delta_far) between branches, J/kg."""
    from .gie import G_NEWTON
    G = G_NEWTON if G is None else G
    far = 0.0 if np.isinf(delta_far) else G * m / delta_far
    return G * m / delta_near - far


def worldline_energy_integral(m: float, diff: PotentialDifference,
                              method: str = "trapezoid") -> float:
    """Quadrature of the power-times-proper-time integrand along the worldline.

    For constant samples this reduces exactly to the m * delta_phi * T
    product of the static case.
    """
    if diff.constant is not None:
        raise ValueError("constant potential difference has a closed form; "
                         "use static_differential_phase")
    integrand = m * diff.samples
    if method == "trapezoid":
        return float(trapezoid(integrand, diff.times))
    if method == "simpson":
        return float(simpson(integrand, x=diff.times))
    raise ValueError("method must be 'trapezoid' or 'simpson'")


def hamilton_jacobi_residual(p: float, E: float, V: float, m: float) -> float:
    """Residual of dS/dt + (grad S)^2 / 2m + V for a plane-wave action.

    S = p.x - E t with constant amplitude, so the residual is
    -E + p^2/2m + V: zero exactly on shell.
    """
    return -E + p ** 2 / (2 * m) + V


def three_way_comparison(m: float, delta: float, T: float,
                         G: float | None = None, hbar: float = HBAR):
    """Newtonian, redshift, and geometric phases for one configuration, rad.

    All three are G m^2 T / (hbar delta); returning them separately makes
    the agreement checkable rather than assumed.
    """
    from .gie import G_NEWTON
    G = G_NEWTON if G is None else G
    newtonian = G * m ** 2 * T / (hbar * delta)
    redshift = (G * m / delta) * m * T / hbar
    geometric = static_differential_phase(
        m, gravcat_potential_difference(m, delta, G=G), T, hbar=hbar).phase
    return newtonian, redshift, geometric
