"""Brute-force classical-correlation oracle built from explicit I (x) |psi><psi| projectors."""

import numpy as np


def _conditional_entropies(rho, theta, phi):
    n = theta.size
    psi = np.stack([np.cos(theta), np.exp(1j * phi) * np.sin(theta)], -1)
    perp = np.stack([-np.exp(-1j * phi) * np.sin(theta), np.cos(theta)], -1)
    total = np.zeros(n)
    for v in (psi, perp):
        local = np.einsum("ni,nj->nij", v, v.conj())
        projector = np.einsum("ab,nij->naibj", np.eye(2), local).reshape(n, 4, 4)
        post = projector @ rho @ projector
        prob = np.einsum("nii->n", post).real
        reduced = post.reshape(n, 2, 2, 2, 2).trace(axis1=2, axis2=4)
        ok = prob > 1e-14
        ev = np.linalg.eigvalsh(reduced[ok] / prob[ok, None, None])
        safe = np.where(ev > 1e-15, ev, 1.0)
        total[ok] += prob[ok] * -np.sum(np.where(ev > 1e-15, ev * np.log2(safe), 0.0), axis=-1)
    return total


def _entropy_of_A(rho):
    ev = np.linalg.eigvalsh(rho.reshape(2, 2, 2, 2).trace(axis1=1, axis2=3))
    ev = ev[ev > 1e-15]
    return -np.sum(ev * np.log2(ev))


def brute_force_classical_correlation(rho, thetas, phis, chunk=1 << 16):
    """Max of S(A) - S(A|B) over the product grid; returns (value, theta, phi)."""
    theta, phi = (a.ravel() for a in np.meshgrid(thetas, phis, indexing="ij"))
    best, arg = np.inf, 0
    for i in range(0, theta.size, chunk):
        h = _conditional_entropies(rho, theta[i : i + chunk], phi[i : i + chunk])
        j = int(np.argmin(h))
        if h[j] < best:
            best, arg = h[j], i + j
    return _entropy_of_A(rho) - best, theta[arg], phi[arg]


def dense_grid(n_theta=513, n_phi=1025):
    return np.linspace(0, np.pi / 2, n_theta), np.linspace(0, 2 * np.pi, n_phi, endpoint=False)
