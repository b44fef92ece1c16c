"""
Small dense Hermitian linear algebra for one and two qubits.

Everything here works on 2x2 or 4x4 complex arrays in the computational
basis {|00>, |01>, |10>, |11>}, with qubit A the left (most significant)
tensor factor and qubit B the right one.

The eigensolver is a cyclic Jacobi method for complex Hermitian matrices.
At these sizes it converges in a handful of sweeps and gives eigenvectors
orthonormal to machine precision.
"""

from typing import NamedTuple

import numpy as np

from .errors import NumericalError, ValidationError

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-10
NEGATIVE_EIG_ATOL = 1e-10

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# |ab> -> |ba>
SWAP = np.eye(4, dtype=complex)[[0, 2, 1, 3]]


class EigenDecomposition(NamedTuple):
    """Eigenvalues in descending order; ``eigenvectors[:, i]`` pairs with ``eigenvalues[i]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _as_square(m, dims=(2, 4)) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in dims:
        raise ValidationError(f"expected a square matrix of dimension {dims}, got shape {a.shape}")
    return a


def check_hermitian(m, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Return ``m`` as a complex array, raising if it is not Hermitian within ``atol``."""
    a = _as_square(m)
    diff = np.abs(a - a.conj().T)
    i, j = np.unravel_index(np.argmax(diff), diff.shape)
    if diff[i, j] > atol:
        raise ValidationError(
            f"matrix is not Hermitian: entry ({i},{j}) = {a[i, j]} but "
            f"conj of entry ({j},{i}) = {np.conj(a[j, i])} (|diff| = {diff[i, j]:.3e})"
        )
    return a


def check_density_matrix(rho, dim: int | None = None) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, no eigenvalue below -1e-10."""
    a = check_hermitian(rho)
    if dim is not None and a.shape[0] != dim:
        raise ValidationError(f"expected a {dim}x{dim} density matrix, got {a.shape[0]}x{a.shape[0]}")
    tr = np.trace(a).real
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValidationError(f"density matrix trace is {tr!r}, expected 1")
    lam_min = herm_eigen(a).eigenvalues[-1]
    if lam_min < -NEGATIVE_EIG_ATOL:
        raise ValidationError(f"density matrix has negative eigenvalue {lam_min:.3e}")
    return a


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero a[p, q] in place by a unitary rotation in the (p, q) plane; accumulate into v."""
    apq = a[p, q]
    r = abs(apq)
    phase = apq / r  # e^{i alpha}
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = 1.0 / (abs(tau) + np.sqrt(1.0 + tau * tau))
    if tau < 0:
        t = -t
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    # columns p, q of the rotation: c e_p - s e^{-i alpha} e_q and s e_p + c e^{-i alpha} e_q
    g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, idx] = v[:, idx] @ g


def herm_eigen(m) -> EigenDecomposition:
    """
    Eigendecomposition of a 2x2 or 4x4 Hermitian matrix by cyclic Jacobi sweeps.

    Sweeps stop once the largest off-diagonal magnitude drops below
    ``1e-13 * max(1, ||m||_F)``. Raises ``ValidationError`` for non-Hermitian
    input and ``NumericalError`` if 100 sweeps do not suffice.
    """
    a = check_hermitian(m).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    tol = JACOBI_TOL * max(1.0, np.linalg.norm(a))
    # symmetrize so the rotations act on an exactly Hermitian matrix
    a = 0.5 * (a + a.conj().T)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(JACOBI_MAX_SWEEPS):
        off = max(abs(a[p, q]) for p, q in pairs)
        if off < tol:
            break
        for p, q in pairs:
            if abs(a[p, q]) > 0.1 * tol:
                _jacobi_rotate(a, v, p, q)
    else:
        raise NumericalError(f"Jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    lam = a.diagonal().real
    order = np.argsort(-lam, kind="stable")
    return EigenDecomposition(lam[order], v[:, order])


def tensor_product(m1, m2) -> np.ndarray:
    """Kronecker product ``m1 ⊗ m2`` with ``m1`` acting on qubit A."""
    return np.kron(np.asarray(m1, dtype=complex), np.asarray(m2, dtype=complex))


def partial_trace(rho, keep: str = "A") -> np.ndarray:
    """Reduced 2x2 state of qubit ``keep`` ("A" or "B") from a 4x4 density matrix."""
    return reduced_state(check_density_matrix(rho, dim=4), keep)


def reduced_state(rho: np.ndarray, keep: str) -> np.ndarray:
    """Unchecked partial trace of a 4x4 array."""
    t = rho.reshape(2, 2, 2, 2)  # [a, b, a', b']
    if keep == "A":
        return np.einsum("ijkj->ik", t)
    if keep == "B":
        return np.einsum("ijil->jl", t)
    raise ValidationError(f"keep must be 'A' or 'B', got {keep!r}")


def entropy_from_eigenvalues(lam) -> float:
    """Shannon entropy in bits of a spectrum, clamping (-1e-10, 0] to 0 and using 0 log 0 = 0."""
    lam = np.asarray(lam, dtype=float)
    if lam.min() < -NEGATIVE_EIG_ATOL:
        raise ValidationError(f"negative eigenvalue {lam.min():.3e} in entropy")
    lam = lam[lam > 0]
    return float(max(0.0, -np.sum(lam * np.log2(lam))))


def von_neumann_entropy(rho) -> float:
    """S(rho) = -tr(rho log2 rho), in bits."""
    return entropy_from_eigenvalues(herm_eigen(check_density_matrix(rho)).eigenvalues)


def binary_entropy(p):
    """h(p) = -p log2 p - (1-p) log2 (1-p), elementwise, with 0 log 0 = 0."""
    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    q = 1.0 - p
    with np.errstate(divide="ignore", invalid="ignore"):
        hp = np.where(p > 0, -p * np.log2(np.where(p > 0, p, 1.0)), 0.0)
        hq = np.where(q > 0, -q * np.log2(np.where(q > 0, q, 1.0)), 0.0)
    return hp + hq
