"""Alice/Bob quadrupole thought-experiment inequalities, in Planck units.

Alice holds a particle in superposition with effective quadrupole Q_A
and recombines it in time T_A; Bob, a distance D away, frees a test
particle for time T_B to read off which-path information.  Three
requirements structure the analysis:

  MLR  (minimum length):      Q_A T_B^2 > D^4   -- Bob can resolve the path
  QRR  (quantized radiation): Q_A < T_A^2       -- Alice emits no quantum
  CRR  (classical radiation): Q_A << T_A^{5/2}  -- negligible classical energy

With L_P = c = hbar = 1, spacelike separation means T_A < D and T_B < D,
and under it MLR and QRR can never hold together:
Q_A T_B^2 < T_A^2 T_B^2 < D^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

DEFAULT_CRR_MARGIN = 10.0


class CaseLabel(Enum):
    ALICE_COHERENT_BOB_BLIND = "AliceCoherent_BobBlind"
    ALICE_DECOHERED_BOB_MAY_RESOLVE = "AliceDecohered_BobMayResolve"
    OTHER = "Other"


@dataclass(frozen=True)
class GedankenParams:
    """Planck-unit parameters of one Alice/Bob configuration."""

    Q_A: float
    T_A: float
    T_B: float
    D: float

    def __post_init__(self):
        for name in ("Q_A", "T_A", "T_B", "D"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class RegimeReport:
    """Evaluated predicates and estimates for one configuration."""

    mlr: bool
    qrr: bool
    crr: bool
    n_quanta: float
    displacement: float
    spacelike: bool
    case_label: CaseLabel


def evaluate(p: GedankenParams, crr_margin: float = DEFAULT_CRR_MARGIN) -> RegimeReport:
    """Evaluate MLR/QRR/CRR, the quanta count, and Bob's displacement.

    crr_margin > 1 encodes the strict "much less than" of the classical
    radiation requirement; all order-one constants are set to 1.
    """
    if crr_margin <= 1:
        raise ValueError("crr_margin must exceed 1")
    displacement = p.Q_A * p.T_B ** 2 / p.D ** 4
    mlr = displacement > 1.0
    qrr = p.Q_A < p.T_A ** 2
    crr = p.Q_A * crr_margin < p.T_A ** 2.5
    n_quanta = (p.Q_A / p.T_A ** 2) ** 2
    spacelike = p.T_A < p.D and p.T_B < p.D
    if p.Q_A < p.T_A ** 2:
        case = CaseLabel.ALICE_COHERENT_BOB_BLIND
    elif p.Q_A > p.T_A ** 2:
        case = CaseLabel.ALICE_DECOHERED_BOB_MAY_RESOLVE
    else:
        case = CaseLabel.OTHER
    return RegimeReport(mlr=mlr, qrr=qrr, crr=crr, n_quanta=n_quanta,
                        displacement=displacement, spacelike=spacelike,
                        case_label=case)


@dataclass(frozen=True)
class ScanCertificate:
    """Outcome of an exhaustive grid scan for MLR-and-QRR clashes."""

    points_scanned: int
    spacelike_points: int
    violations: int
    violating_points: tuple
    witness_chain: str = "Q_A*T_B^2 < T_A^2*T_B^2 < D^4 whenever QRR and spacelike"


def log_grid(lo: float = 1e-2, hi: float = 1e4, n: int = 32) -> np.ndarray:
    return np.logspace(np.log10(lo), np.log10(hi), n)


def no_paradox_scan(q_grid=None, ta_grid=None, tb_grid=None, d_grid=None,
                    require_spacelike: bool = True,
                    max_reported: int = 32) -> ScanCertificate:
    """Scan a log-spaced grid for points with MLR and QRR holding together.

    Restricted to spacelike points the count is provably zero; with
    require_spacelike=False the scan simply reports what it finds
    (lightlike/timelike configurations can satisfy both).
    """
    q = log_grid() if q_grid is None else np.asarray(q_grid, dtype=float)
    ta = log_grid() if ta_grid is None else np.asarray(ta_grid, dtype=float)
    tb = log_grid() if tb_grid is None else np.asarray(tb_grid, dtype=float)
    d = log_grid() if d_grid is None else np.asarray(d_grid, dtype=float)
    Q, TA, TB, D = np.meshgrid(q, ta, tb, d, indexing="ij", sparse=True)
    mlr = Q * TB ** 2 > D ** 4
    qrr = Q < TA ** 2
    spacelike = np.broadcast_to((TA < D) & (TB < D), np.broadcast_shapes(
        Q.shape, TA.shape, TB.shape, D.shape))
    clash = mlr & qrr
    if require_spacelike:
        clash = clash & spacelike
    n_total = spacelike.size
    n_space = int(np.count_nonzero(spacelike))
    idx = np.argwhere(clash)
    points = tuple(
        (float(q[i]), float(ta[j]), float(tb[k]), float(d[l]))
        for i, j, k, l in idx[:max_reported]
    )
    return ScanCertificate(points_scanned=n_total, spacelike_points=n_space,
                           violations=int(len(idx)), violating_points=points)


def mlr_feasibility(p: GedankenParams) -> bool:
    """Whether Q_A > D^2, the only window in which MLR can hold spacelike.

    With T_B < D we have T_B^2/D^2 < 1, so Q_A T_B^2 > D^4 forces
    Q_A > D^2; the implication (mlr and T_B < D) => Q_A > D^2 is checked.
    """
    feasible = p.Q_A > p.D ** 2
    if p.T_B < p.D and evaluate(p).mlr and not feasible:
        raise AssertionError("MLR held spacelike with Q_A <= D^2; inequality chain broken")
    return feasible


@dataclass(frozen=True)
class RadiationBoundRow:
    """Comparison of the quantized and classical radiation bounds at one T_A."""

    T_A: float
    qrr_bound: float       # T_A^2
    crr_bound: float       # T_A^{5/2}
    tighter: str           # 'QRR', 'CRR', or 'equal'
    crr_can_fail_alone: bool  # T_A < 1 window: CRR violable while QRR holds


def crr_qrr_comparison(ta_values) -> list[RadiationBoundRow]:
    """Tabulate which radiation bound is tighter across a range of T_A.

    T_A^2 < T_A^{5/2} for T_A > 1 (QRR tighter) and the reverse for
    T_A < 1, where a Q_A between the bounds violates CRR while
    satisfying QRR -- and then MLR necessarily fails at spacelike
    separation, so no paradox reappears.
    """
    rows = []
    for ta in np.atleast_1d(np.asarray(ta_values, dtype=float)):
        if ta <= 0:
            raise ValueError("T_A values must be positive")
        q_bound = ta ** 2
        c_bound = ta ** 2.5
        if np.isclose(q_bound, c_bound, rtol=1e-12, atol=0):
            tighter = "equal"
        elif q_bound < c_bound:
            tighter = "QRR"
        else:
            tighter = "CRR"
        rows.append(RadiationBoundRow(
            T_A=float(ta), qrr_bound=float(q_bound), crr_bound=float(c_bound),
            tighter=tighter, crr_can_fail_alone=bool(ta < 1)))
    return rows
