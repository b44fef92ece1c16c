"""
Two-qubit XXZ Hamiltonians with a Dzyaloshinskii-Moriya term and their
thermal states.

Two models are supported:

* ``"Dz"``: H = J(XX + YY) + Jz ZZ + D (X⊗Y - Y⊗X)
* ``"Dx"``: H = J(XX + YY) + Jz ZZ + D (Y⊗Z - Z⊗Y)

Each has a closed-form Gibbs state and an independent route through
:func:`gibbs_oracle`, which diagonalizes H numerically. The oracle is the
reference; the closed forms are checked against it.

All Boltzmann factors are taken relative to the lowest energy level, so the
states stay finite down to T ~ 1e-3 even for couplings of order 10.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, UsageError
from .linalg import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    check_density_matrix,
    herm_eigen,
    tensor_product,
)

MODELS = ("Dz", "Dx")

# temperature used for the numerical T -> 0 limit
GROUND_STATE_T = 1e-3

_XX = tensor_product(SIGMA_X, SIGMA_X)
_YY = tensor_product(SIGMA_Y, SIGMA_Y)
_ZZ = tensor_product(SIGMA_Z, SIGMA_Z)
_XY_YX = tensor_product(SIGMA_X, SIGMA_Y) - tensor_product(SIGMA_Y, SIGMA_X)
_YZ_ZY = tensor_product(SIGMA_Y, SIGMA_Z) - tensor_product(SIGMA_Z, SIGMA_Y)


def _normalize_model(model: str) -> str:
    for m in MODELS:
        if str(model).lower() == m.lower():
            return m
    raise UsageError(f"unknown model {model!r}; expected one of {MODELS}")


@dataclass(frozen=True)
class ModelParams:
    """Couplings and temperature for one evaluation point (k_B = 1).

    ``D`` is the DM strength along z for the ``"Dz"`` model and along x for
    ``"Dx"``. Signs are unrestricted; only thermal constructions need T > 0.
    """

    model: str
    J: float
    Jz: float
    D: float
    T: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "model", _normalize_model(self.model))
        for name in ("J", "Jz", "D", "T"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def beta(self) -> float:
        _require_positive_T(self.T)
        return 1.0 / self.T

    def with_T(self, T: float) -> "ModelParams":
        return replace(self, T=T)

    def with_D(self, D: float) -> "ModelParams":
        return replace(self, D=D)


def _require_positive_T(T):
    if not T > 0:
        raise DomainError(f"temperature must be positive, got T={T!r}")


def _require_model(p: ModelParams, model: str):
    if p.model != model:
        raise UsageError(f"expected a {model} parameter set, got model={p.model!r}")


def hamiltonian_dz(p: ModelParams) -> np.ndarray:
    _require_model(p, "Dz")
    return p.J * (_XX + _YY) + p.Jz * _ZZ + p.D * _XY_YX


def hamiltonian_dx(p: ModelParams) -> np.ndarray:
    _require_model(p, "Dx")
    return p.J * (_XX + _YY) + p.Jz * _ZZ + p.D * _YZ_ZY


def hamiltonian(p: ModelParams) -> np.ndarray:
    return hamiltonian_dz(p) if p.model == "Dz" else hamiltonian_dx(p)


def gibbs_oracle(H, T: float) -> np.ndarray:
    """exp(-H/T) / Z from the eigendecomposition of ``H``, shifted by the lowest level."""
    _require_positive_T(T)
    eig = herm_eigen(H)
    lam = eig.eigenvalues
    weights = np.exp(-(lam - lam[-1]) / T)
    v = eig.eigenvectors
    rho = (v * (weights / weights.sum())) @ v.conj().T
    return 0.5 * (rho + rho.conj().T)


def ground_state_limit(p: ModelParams) -> np.ndarray:
    """Numerical T -> 0 state: the Gibbs oracle at T = 1e-3."""
    return gibbs_oracle(hamiltonian(p), GROUND_STATE_T)


@dataclass(frozen=True)
class DzClosedForm:
    """Closed-form ingredients of the Dz thermal state.

    ``u``, ``v``, ``Z`` and ``corner`` (= e^{-beta Jz}) all carry the common
    factor ``exp(beta * shift)``, where ``shift`` is the ground energy. The
    factor cancels in the state.
    """

    w: float
    theta: float
    u: float
    v: float
    Z: float
    corner: float
    shift: float


@dataclass(frozen=True)
class DxClosedForm:
    """Closed-form ingredients of the Dx thermal state, scaled like :class:`DzClosedForm`."""

    w: float
    phi: float
    varphi: float
    mu_plus: float
    mu_minus: float
    nu_plus: float
    nu_minus: float
    xi: complex
    Z: float
    shift: float


def thermal_state_closed_dz(p: ModelParams):
    """Dz-model Gibbs state assembled from u, v, Z, w, theta. Returns ``(rho, DzClosedForm)``."""
    _require_model(p, "Dz")
    beta = p.beta
    w = np.hypot(p.J, p.D)
    # arctan(D/J) for J > 0; arctan2 keeps 2J + 2iD = 2w e^{i theta} for any sign of J
    theta = np.arctan2(p.D, p.J)

    levels = np.array([p.Jz, -p.Jz - 2 * w, -p.Jz + 2 * w])
    shift = levels.min()
    corner, e_minus, e_plus = np.exp(-beta * (levels - shift))

    u = 0.5 * (e_minus + e_plus)  # e^{beta Jz} cosh(2 beta w)
    v = 0.5 * (e_plus - e_minus)  # -e^{beta Jz} sinh(2 beta w)
    Z = 2 * corner + 2 * u

    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[3, 3] = corner
    rho[1, 1] = rho[2, 2] = u
    rho[1, 2] = v * np.exp(1j * theta)
    rho[2, 1] = v * np.exp(-1j * theta)
    rho /= Z
    return rho, DzClosedForm(w, theta, u, v, Z, corner, shift)


def _mixing_trig(num, den, alt_num, alt_den):
    """sin^2, cos^2, sin*cos of arctan(num/den), using whichever equivalent pair is better conditioned."""
    if np.hypot(num, den) < np.hypot(alt_num, alt_den):
        num, den = alt_num, alt_den
    norm2 = num * num + den * den
    angle = np.arctan2(num, den)
    if angle > np.pi / 2:
        angle -= np.pi
    elif angle <= -np.pi / 2:
        angle += np.pi
    return num * num / norm2, den * den / norm2, num * den / norm2, angle


def thermal_state_closed_dx(p: ModelParams):
    """Dx-model Gibbs state assembled from mu±, nu±, xi, Z'. Returns ``(rho, DxClosedForm)``.

    When J + Jz = 0 and D = 0 the mixing angles are undefined; the state then
    comes from :func:`gibbs_oracle` and the angles are reported as NaN.
    """
    _require_model(p, "Dx")
    beta = p.beta
    s = p.J + p.Jz
    w = np.hypot(s, 2 * p.D)

    levels = np.array([p.Jz, 2 * p.J - p.Jz, -p.J + w, -p.J - w])
    shift = levels.min()
    a, b, A, B = np.exp(-beta * (levels - shift))
    Z = a + b + A + B  # 2e^{-bJ}cosh(b(J-Jz)) + 2e^{bJ}cosh(b w')

    if w == 0.0:
        # degenerate pair: the two mixing vectors span the block and any split gives these sums
        mu_p, mu_m, nu_p, nu_m, xi = a + A, a - A, b + A, b - A, 0j
        rho = gibbs_oracle(hamiltonian_dx(p), p.T)
        return rho, DxClosedForm(w, np.nan, np.nan, mu_p, mu_m, nu_p, nu_m, xi, Z, shift)

    # phi = arctan(2D / (s - w')), varphi = arctan(2D / (s + w')); (s - w')(s + w') = -4D^2
    s2p, c2p, scp, phi = _mixing_trig(2 * p.D, s - w, s + w, -2 * p.D)
    s2v, c2v, scv, varphi = _mixing_trig(2 * p.D, s + w, s - w, -2 * p.D)

    mu_p = a + (A * s2p + B * s2v)
    mu_m = a - (A * s2p + B * s2v)
    nu_p = b + (A * c2p + B * c2v)
    nu_m = b - (A * c2p + B * c2v)
    xi = 1j * (A * scp + B * scv)

    rho = np.array(
        [
            [mu_p, -xi, xi, mu_m],
            [xi, nu_p, nu_m, -xi],
            [-xi, nu_m, nu_p, xi],
            [mu_m, xi, -xi, mu_p],
        ],
        dtype=complex,
    ) / (2 * Z)
    return rho, DxClosedForm(w, phi, varphi, mu_p, mu_m, nu_p, nu_m, xi, Z, shift)


def thermal_state(p: ModelParams) -> np.ndarray:
    """Closed-form thermal state for either model."""
    if p.model == "Dz":
        return thermal_state_closed_dz(p)[0]
    return thermal_state_closed_dx(p)[0]


def concurrence_closed_dz(p: ModelParams, literal: bool = True) -> float:
    """
    Closed-form thermal concurrence of the Dz model, clipped to [0, 1].

    With ``literal=True`` the expression is evaluated as printed,

        C = (beta Jz / Z) (e^{2bw} - e^{-2bJz} - e^{-2bw} - e^{-2bJz}),

    which is not a concurrence in general. ``literal=False`` uses the prefactor
    e^{beta Jz} instead, and the result then equals the Wootters concurrence of
    the Dz thermal state.
    """
    _require_model(p, "Dz")
    beta = p.beta
    w = np.hypot(p.J, p.D)
    if p.Jz < -w:
        return 0.0
    bJz, bw = beta * p.Jz, beta * w
    # Z = 2 e^{-bJz} + e^{bJz + 2bw} + e^{bJz - 2bw}
    logZ = np.logaddexp.reduce([np.log(2.0) - bJz, bJz + 2 * bw, bJz - 2 * bw])
    if literal:
        c = bJz * (np.exp(2 * bw - logZ) - 2 * np.exp(-2 * bJz - logZ) - np.exp(-2 * bw - logZ))
    else:
        c = np.exp(bJz + 2 * bw - logZ) - 2 * np.exp(-bJz - logZ) - np.exp(bJz - 2 * bw - logZ)
    return float(np.clip(c, 0.0, 1.0))


def validated_thermal_state(p: ModelParams) -> np.ndarray:
    return check_density_matrix(thermal_state(p), dim=4)


__all__ = [
    "MODELS",
    "ModelParams",
    "DzClosedForm",
    "DxClosedForm",
    "hamiltonian_dz",
    "hamiltonian_dx",
    "hamiltonian",
    "gibbs_oracle",
    "ground_state_limit",
    "thermal_state_closed_dz",
    "thermal_state_closed_dx",
    "thermal_state",
    "concurrence_closed_dz",
    "validated_thermal_state",
]
