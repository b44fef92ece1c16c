"""
Correlation measures for two-qubit states.

Classical correlation is maximized over rank-1 projective measurements on
qubit B,

    |psi_1> = cos(t)|0> + e^{i f} sin(t)|1>,
    |psi_2> = e^{-i f} sin(t)|0> - cos(t)|1>,

first on a coarse (t, f) grid and then by a compass search with step
halving from the best grid point. All entropies are in bits.
"""

import logging
from dataclasses import asdict, dataclass

import numpy as np

from .linalg import (
    SIGMA_Y,
    SWAP,
    binary_entropy,
    check_density_matrix,
    entropy_from_eigenvalues,
    herm_eigen,
    reduced_state,
    tensor_product,
)
from .models import ModelParams, thermal_state

logger = logging.getLogger(__name__)

PROB_CUTOFF = 1e-14
DISCORD_CLAMP = 1e-9

GRID_THETA = 33
GRID_PHI = 65
STEP_START = np.pi / 32
STEP_MIN = 1e-7
MIN_IMPROVEMENT = 1e-11

CRITICAL_T_LO = 1e-2
CRITICAL_T_WIDTH = 1e-6

_YY = tensor_product(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class MeasurementBasis:
    theta_m: float
    phi_m: float

    def kets(self):
        t, f = self.theta_m, self.phi_m
        psi1 = np.array([np.cos(t), np.exp(1j * f) * np.sin(t)])
        psi2 = np.array([np.exp(-1j * f) * np.sin(t), -np.cos(t)])
        return psi1, psi2

    def projectors(self):
        """Pi_i = I ⊗ |psi_i><psi_i| acting on the pair."""
        return tuple(tensor_product(np.eye(2), np.outer(k, k.conj())) for k in self.kets())

    @classmethod
    def canonical(cls, theta, phi) -> "MeasurementBasis":
        """Same projector pair with theta in [0, pi/2] and phi in [0, 2pi)."""
        # Bloch direction of |psi_1>; |psi_2> points the opposite way
        n = np.array([np.sin(2 * theta) * np.cos(phi), np.sin(2 * theta) * np.sin(phi), np.cos(2 * theta)])
        if n[2] < 0:
            n = -n
        t = 0.5 * np.arccos(np.clip(n[2], -1.0, 1.0))
        f = np.arctan2(n[1], n[0]) % (2 * np.pi) if np.hypot(n[0], n[1]) > 1e-15 else 0.0
        return cls(float(t), float(f))


@dataclass(frozen=True)
class CorrelationReport:
    mutual_information: float
    classical_correlation: float
    quantum_discord: float
    concurrence: float
    optimal_basis: MeasurementBasis
    optimizer_evals: int
    raw_discord: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["optimal_basis"] = asdict(self.optimal_basis)
        return d


def _measured_on(rho, measure: str) -> np.ndarray:
    if measure == "B":
        return rho
    if measure == "A":
        return SWAP @ rho @ SWAP
    raise ValueError(f"measure must be 'A' or 'B', got {measure!r}")


def _entropy(rho) -> float:
    return entropy_from_eigenvalues(herm_eigen(rho).eigenvalues)


def mutual_information(rho) -> float:
    """I(A:B) = S(A) + S(B) - S(AB)."""
    return _mutual_information(check_density_matrix(rho, dim=4))


def _mutual_information(rho) -> float:
    return _entropy(reduced_state(rho, "A")) + _entropy(reduced_state(rho, "B")) - _entropy(rho)


def conditional_entropy(rho, basis: MeasurementBasis, measure: str = "B") -> float:
    """sum_i p_i S(rho_i^A) after measuring ``basis`` on qubit ``measure``."""
    rho = _measured_on(check_density_matrix(rho, dim=4), measure)
    total = 0.0
    for proj in basis.projectors():
        post = proj @ rho @ proj
        p = np.trace(post).real
        if p < PROB_CUTOFF:
            continue
        total += p * _entropy(reduced_state(post / p, "A"))
    return total


def _conditional_entropy_batch(rho4, theta, phi):
    """Vectorized conditional entropy over arrays of measurement angles.

    ``rho4`` is the density matrix reshaped to (2, 2, 2, 2) as [a, b, a', b'].
    For each outcome the unnormalized state of A is M = <psi|_B rho |psi>_B;
    its eigenvalues follow from the trace p and determinant of M.
    """
    c, s = np.cos(theta), np.sin(theta)
    e = np.exp(1j * phi)
    total = np.zeros(np.broadcast(theta, phi).shape)
    for psi in (np.stack([c + 0j * e, e * s], axis=-1), np.stack([np.conj(e) * s, -c + 0j * e], axis=-1)):
        m = np.einsum("...b,abcd,...d->...ac", psi.conj(), rho4, psi)
        p = (m[..., 0, 0] + m[..., 1, 1]).real
        det = (m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]).real
        ok = p > PROB_CUTOFF
        safe_p = np.where(ok, p, 1.0)
        disc = np.sqrt(np.clip(1.0 - 4.0 * det / safe_p**2, 0.0, 1.0))
        total += np.where(ok, p * binary_entropy(0.5 * (1.0 + disc)), 0.0)
    return total


def _maximize_classical_information(rho, phi_offset=0.0):
    """Return (min conditional entropy, theta, phi, evals) for a validated 4x4 state."""
    rho4 = rho.reshape(2, 2, 2, 2)
    tt, ff = np.meshgrid(
        np.linspace(0.0, np.pi / 2, GRID_THETA),
        phi_offset + np.arange(GRID_PHI) * (2 * np.pi / GRID_PHI),
        indexing="ij",
    )
    vals = _conditional_entropy_batch(rho4, tt, ff)
    evals = vals.size
    k = np.argmin(vals)  # first minimum in row-major order, deterministic
    best = float(vals.flat[k])
    x = np.array([tt.flat[k], ff.flat[k]])

    moves = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    step = STEP_START
    while step >= STEP_MIN:
        trial = x + step * moves
        tv = _conditional_entropy_batch(rho4, trial[:, 0], trial[:, 1])
        evals += len(tv)
        j = int(np.argmin(tv))
        if best - tv[j] > MIN_IMPROVEMENT:
            best = float(tv[j])
            x = trial[j]
        else:
            step *= 0.5
    return best, x[0], x[1], evals


def classical_correlation(rho, measure: str = "B"):
    """Max over projective measurements on ``measure`` of S(A) - S(A | measurement).

    Returns ``(bits, MeasurementBasis)``.
    """
    cc, basis, _ = _classical_correlation(check_density_matrix(rho, dim=4), measure)
    return cc, basis


def _classical_correlation(rho, measure):
    rho = _measured_on(rho, measure)
    s_a = _entropy(reduced_state(rho, "A"))
    h_min, t, f, evals = _maximize_classical_information(rho)
    return max(0.0, s_a - h_min), MeasurementBasis.canonical(t, f), evals


def concurrence_wootters(rho, raw: bool = False) -> float:
    """
    Wootters concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are square roots of the eigenvalues of rho (Y⊗Y) rho* (Y⊗Y), taken
    here from the Hermitian matrix sqrt(rho) (Y⊗Y) rho* (Y⊗Y) sqrt(rho), which
    has the same spectrum. With ``raw=True`` the unclipped value is returned.
    """
    return _concurrence(check_density_matrix(rho, dim=4), raw)


def _concurrence(rho, raw=False) -> float:
    eig = herm_eigen(rho)
    v = eig.eigenvectors
    sqrt_rho = (v * np.sqrt(np.clip(eig.eigenvalues, 0.0, None))) @ v.conj().T
    flipped = _YY @ rho.conj() @ _YY
    r = sqrt_rho @ flipped @ sqrt_rho
    mu = herm_eigen(0.5 * (r + r.conj().T)).eigenvalues
    lam = np.sqrt(np.clip(mu, 0.0, None))
    c = float(lam[0] - lam[1] - lam[2] - lam[3])
    return c if raw else max(0.0, c)


def quantum_discord(rho, measure: str = "B"):
    """Discord I(A:B) - CC, measured on ``measure``. Returns ``(bits, CorrelationReport)``."""
    rho = check_density_matrix(rho, dim=4)
    mi = _mutual_information(rho)
    cc, basis, evals = _classical_correlation(rho, measure)
    raw = mi - cc
    if raw < -DISCORD_CLAMP:
        logger.warning("discord %.3e below clamp window; optimizer overshoot?", raw)
    qd = max(raw, 0.0) if raw > -DISCORD_CLAMP else raw
    report = CorrelationReport(
        mutual_information=mi,
        classical_correlation=cc,
        quantum_discord=qd,
        concurrence=_concurrence(rho),
        optimal_basis=basis,
        optimizer_evals=evals,
        raw_discord=raw,
    )
    return qd, report


def correlation_report(p: ModelParams) -> CorrelationReport:
    return quantum_discord(thermal_state(p))[1]


def critical_temperature(p: ModelParams, T_hi: float, full_output: bool = False):
    """
    Temperature above which the thermal concurrence vanishes.

    Bisects the unclipped Wootters value on [1e-2, T_hi] down to a bracket
    of width 1e-6 and returns the upper end, where the concurrence is zero.
    Returns ``None`` when the interval does not bracket a crossing. With
    ``full_output=True`` returns ``(T_c or None, status)`` where status is
    one of "converged", "zero throughout", "positive throughout".
    """
    if not T_hi > CRITICAL_T_LO:
        raise ValueError(f"T_hi must exceed {CRITICAL_T_LO}, got {T_hi!r}")

    def f(T):
        return _concurrence(thermal_state(p.with_T(T)), raw=True)

    lo, hi = CRITICAL_T_LO, float(T_hi)
    if f(lo) <= 0:
        result, status = None, "zero throughout"
    elif f(hi) > 0:
        result, status = None, "positive throughout"
    else:
        while hi - lo > CRITICAL_T_WIDTH:
            mid = 0.5 * (lo + hi)
            if f(mid) > 0:
                lo = mid
            else:
                hi = mid
        result, status = hi, "converged"
    if result is None:
        logger.info("no critical temperature in [%g, %g]: %s", CRITICAL_T_LO, T_hi, status)
    return (result, status) if full_output else result
