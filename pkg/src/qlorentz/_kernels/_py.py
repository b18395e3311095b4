"""Pure-numpy kernels: vectorized fallback for the hot inner loops.

The compiled extension (_core) implements the same three functions with the
same contracts; parity between the two backends is covered by tests.
"""

from __future__ import annotations

import numpy as np


def _batch_standard_boost(momenta: np.ndarray, energies: np.ndarray, mass: float) -> np.ndarray:
    """Rotation-free boosts L(p) for a batch of spatial momenta, shape (N,4,4)."""
    n = momenta.shape[0]
    out = np.zeros((n, 4, 4))
    out[:, 0, 0] = energies / mass
    out[:, 0, 1:] = momenta / mass
    out[:, 1:, 0] = momenta / mass
    out[:, 1:, 1:] = np.eye(3) + np.einsum("ni,nj->nij", momenta, momenta) / (
        mass * (mass + energies)
    )[:, None, None]
    return out


def _batch_quaternion(r: np.ndarray) -> np.ndarray:
    """Unit quaternions (w, x, y, z), w >= 0, for a batch of rotation matrices.

    Branches on the largest of (trace, diagonal entries) per matrix.
    """
    n = r.shape[0]
    q = np.empty((n, 4))
    tr = r[:, 0, 0] + r[:, 1, 1] + r[:, 2, 2]
    diag_max = np.max(np.stack([r[:, 0, 0], r[:, 1, 1], r[:, 2, 2]]), axis=0)

    m0 = tr > diag_max
    s = np.sqrt(np.clip(1.0 + tr[m0], 0.0, None)) * 2.0
    q[m0, 0] = 0.25 * s
    q[m0, 1] = (r[m0, 2, 1] - r[m0, 1, 2]) / s
    q[m0, 2] = (r[m0, 0, 2] - r[m0, 2, 0]) / s
    q[m0, 3] = (r[m0, 1, 0] - r[m0, 0, 1]) / s

    m1 = ~m0 & (r[:, 0, 0] >= r[:, 1, 1]) & (r[:, 0, 0] >= r[:, 2, 2])
    s = np.sqrt(np.clip(1.0 + r[m1, 0, 0] - r[m1, 1, 1] - r[m1, 2, 2], 0.0, None)) * 2.0
    q[m1, 0] = (r[m1, 2, 1] - r[m1, 1, 2]) / s
    q[m1, 1] = 0.25 * s
    q[m1, 2] = (r[m1, 0, 1] + r[m1, 1, 0]) / s
    q[m1, 3] = (r[m1, 0, 2] + r[m1, 2, 0]) / s

    m2 = ~m0 & ~m1 & (r[:, 1, 1] >= r[:, 2, 2])
    s = np.sqrt(np.clip(1.0 - r[m2, 0, 0] + r[m2, 1, 1] - r[m2, 2, 2], 0.0, None)) * 2.0
    q[m2, 0] = (r[m2, 0, 2] - r[m2, 2, 0]) / s
    q[m2, 1] = (r[m2, 0, 1] + r[m2, 1, 0]) / s
    q[m2, 2] = 0.25 * s
    q[m2, 3] = (r[m2, 1, 2] + r[m2, 2, 1]) / s

    m3 = ~m0 & ~m1 & ~m2
    s = np.sqrt(np.clip(1.0 - r[m3, 0, 0] - r[m3, 1, 1] + r[m3, 2, 2], 0.0, None)) * 2.0
    q[m3, 0] = (r[m3, 1, 0] - r[m3, 0, 1]) / s
    q[m3, 1] = (r[m3, 0, 2] + r[m3, 2, 0]) / s
    q[m3, 2] = (r[m3, 1, 2] + r[m3, 2, 1]) / s
    q[m3, 3] = 0.25 * s

    q[q[:, 0] < 0] *= -1.0
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    return q


def wigner_d_batch(lam: np.ndarray, mass: float, momenta: np.ndarray):
    """Boosted momenta and spin-1/2 Wigner matrices for every grid node.

    Returns (q (N,3) spatial momenta of lam.p, d (N,2,2) complex) where
    d_i = D[W(lam, p_i)] = exp(-i (omega_i/2) n_i.sigma).
    """
    lam = np.asarray(lam, dtype=float)
    momenta = np.asarray(momenta, dtype=float)
    energies = np.sqrt(mass * mass + np.einsum("ni,ni->n", momenta, momenta))
    four = np.concatenate([energies[:, None], momenta], axis=1)
    qfour = four @ lam.T

    lp = _batch_standard_boost(momenta, energies, mass)
    linv = _batch_standard_boost(-qfour[:, 1:], qfour[:, 0], mass)
    w = linv @ (lam @ lp)

    q = _batch_quaternion(w[:, 1:, 1:])
    d = np.empty((momenta.shape[0], 2, 2), dtype=complex)
    d[:, 0, 0] = q[:, 0] - 1j * q[:, 3]
    d[:, 0, 1] = -1j * q[:, 1] - q[:, 2]
    d[:, 1, 0] = -1j * q[:, 1] + q[:, 2]
    d[:, 1, 1] = q[:, 0] + 1j * q[:, 3]
    return np.ascontiguousarray(qfour[:, 1:]), d


def pair_apply(d1: np.ndarray, d2: np.ndarray, g: np.ndarray, chunk: int = 64) -> np.ndarray:
    """Apply per-node spin rotations on both slots of a two-particle amplitude
    tensor g (2, 2, N1, N2): out[x,y,i,j] = d1[i,x,s] d2[j,y,t] g[s,t,i,j]."""
    n1 = g.shape[2]
    out = np.empty_like(g)
    for i0 in range(0, n1, chunk):
        i1 = min(i0 + chunk, n1)
        out[:, :, i0:i1, :] = np.einsum(
            "ixs,jyt,stij->xyij", d1[i0:i1], d2, g[:, :, i0:i1, :], optimize=True
        )
    return out


def pair_spin_density(w1: np.ndarray, w2: np.ndarray, g: np.ndarray, chunk: int = 64) -> np.ndarray:
    """Spin-spin density matrix rho[(s,t),(s',t')] = sum_ij w1_i w2_j
    g[s,t,i,j] conj(g[s',t',i,j]), traced over both momentum grids."""
    n1 = g.shape[2]
    n2 = g.shape[3]
    rho = np.zeros((4, 4), dtype=complex)
    for i0 in range(0, n1, chunk):
        i1 = min(i0 + chunk, n1)
        block = g[:, :, i0:i1, :].reshape(4, (i1 - i0) * n2)
        wt = (w1[i0:i1, None] * w2[None, :]).reshape(-1)
        rho += (block * wt) @ block.conj().T
    return rho
