"""Photon polarization states and the 3x3 effective polarization density
matrix.

Polarization bases follow the carrier convention eps^+/-_p = R(phat) eps^+/-_ref
with eps^+/-_ref = (1, +/-i, 0)/sqrt(2), so helicity amplitudes transform under
rotations by pure phases exp(+/- i xi).

A momentum-independent polarization direction d mixes a physical transverse
part with an unphysical longitudinal one.  The transverse parts b_m(p) of the
three coordinate axes build a POVM whose outcome statistics define the
effective density matrix

    rho_mn = sum_i w_i <b_m | alpha(p_i)> <alpha(p_i) | b_n>,

which coincides with the naive expression sum_i w_i alpha_m alpha_n^* because
alpha(p) is transverse.  rho_mn is Hermitian, PSD and has unit trace, but it
is a measurement construct, not a true marginal: orthogonal photon states
never have orthogonal effective matrices once the beam has angular spread.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .density import error_probability
from .grids import GridSpec, MomentumGrid, photon_beam_grid
from .lorentz import (
    DomainError,
    MASSLESS_REFERENCE,
    embed_rotation,
    null_translation,
    rotation_z,
    standard_rotation,
)

EPS_PLUS_REF = np.array([1.0, 1.0j, 0.0]) / np.sqrt(2.0)
EPS_MINUS_REF = np.array([1.0, -1.0j, 0.0]) / np.sqrt(2.0)

AXES = {"x": np.array([1.0, 0.0, 0.0]), "y": np.array([0.0, 1.0, 0.0]), "z": np.array([0.0, 0.0, 1.0])}

MAX_RELATIVE_SPREAD = 0.3


@dataclass(frozen=True)
class PhotonWavepacket:
    """Beam state on a null-shell grid with helicity amplitudes (+, -) per node."""

    grid: MomentumGrid
    amps: np.ndarray       # (N, 2) complex
    k_carrier: float
    delta_z: float
    delta_r: float

    @property
    def omega(self) -> float:
        """Angular spread Delta_r / k_carrier."""
        return self.delta_r / self.k_carrier

    def norm(self) -> float:
        return float(np.sum(self.grid.weights * np.einsum("ns,ns->n", self.amps, self.amps.conj()).real))


def _unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > 1e-10:
        raise DomainError("direction must be a unit vector")
    return v / n


def polarization_basis(p_hat) -> tuple[np.ndarray, np.ndarray]:
    """Helicity basis vectors (eps^+_p, eps^-_p) = R(phat) (eps^+/-_ref)."""
    r = standard_rotation(_unit(p_hat))
    return r @ EPS_PLUS_REF, r @ EPS_MINUS_REF


def _rotations_batch(p_hats: np.ndarray) -> np.ndarray:
    """Standard rotations R(phat) for a batch of unit vectors, shape (N,3,3)."""
    ct = np.clip(p_hats[:, 2], -1.0, 1.0)
    st = np.hypot(p_hats[:, 0], p_hats[:, 1])
    safe = st > 1e-300
    cp = np.where(safe, p_hats[:, 0] / np.where(safe, st, 1.0), 1.0)
    sp = np.where(safe, p_hats[:, 1] / np.where(safe, st, 1.0), 0.0)
    r = np.empty((p_hats.shape[0], 3, 3))
    r[:, 0, 0] = ct * cp
    r[:, 0, 1] = -sp
    r[:, 0, 2] = cp * st
    r[:, 1, 0] = ct * sp
    r[:, 1, 1] = cp
    r[:, 1, 2] = sp * st
    r[:, 2, 0] = -st
    r[:, 2, 1] = 0.0
    r[:, 2, 2] = ct
    return r


def polarization_basis_batch(p_hats: np.ndarray) -> np.ndarray:
    """Helicity vectors for a batch of directions; shape (N, 2, 3), index 0 is +."""
    r = _rotations_batch(np.asarray(p_hats, dtype=float))
    out = np.empty((p_hats.shape[0], 2, 3), dtype=complex)
    out[:, 0, :] = r @ EPS_PLUS_REF
    out[:, 1, :] = r @ EPS_MINUS_REF
    return out


def generalized_direction_state(d_hat, p_hat) -> tuple[complex, complex, complex]:
    """Decomposition weights (x_+, x_-, x_l) of a polarization direction d into
    helicity and longitudinal parts: x_+/- = d . eps^+/-_p and x_l = d . phat.

    |x_+|^2 + |x_-|^2 + |x_l|^2 = 1 for unit d."""
    d_hat = _unit(d_hat)
    p_hat = _unit(p_hat)
    ep, em = polarization_basis(p_hat)
    return complex(d_hat @ ep), complex(d_hat @ em), complex(d_hat @ p_hat)


def b_vector(axis, p_hat) -> np.ndarray:
    """Transverse part of a polarization direction: the helicity-plane component
    sum_sigma <eps^sigma_p | d> eps^sigma_p = (1 - phat phat^T) d.

    Not normalized; vanishes when d is along phat."""
    d = AXES[axis] if isinstance(axis, str) else _unit(axis)
    p_hat = _unit(p_hat)
    ep, em = polarization_basis(p_hat)
    return (ep.conj() @ d) * ep + (em.conj() @ d) * em


def gaussian_photon(
    k_carrier: float,
    delta_z: float,
    delta_r: float,
    helicity: int,
    spec: GridSpec | None = None,
) -> PhotonWavepacket:
    """Single-helicity Gaussian beam along +z:

        f(p) = N exp(-(p_z - k)^2 / 2 Dz^2) exp(-p_r^2 / 2 Dr^2)

    with unit norm on the grid.  Spreads above 0.3 k are rejected (the
    leading-order regime assumes a paraxial beam)."""
    if helicity not in (+1, -1):
        raise DomainError("helicity must be +1 or -1")
    if delta_z > MAX_RELATIVE_SPREAD * k_carrier or delta_r > MAX_RELATIVE_SPREAD * k_carrier:
        raise DomainError("momentum spread too large for the paraxial regime")
    grid = photon_beam_grid(k_carrier, delta_z, delta_r, spec or GridSpec.named("default"))
    pr2 = grid.nodes[:, 0] ** 2 + grid.nodes[:, 1] ** 2
    f = np.exp(
        -((grid.nodes[:, 2] - k_carrier) ** 2) / (2.0 * delta_z**2) - pr2 / (2.0 * delta_r**2)
    )
    f = f / np.sqrt(np.sum(grid.weights * f * f))
    amps = np.zeros((grid.n, 2), dtype=complex)
    amps[:, 0 if helicity > 0 else 1] = f
    return PhotonWavepacket(grid, amps, k_carrier, delta_z, delta_r)


def polarization_vectors(state: PhotonWavepacket) -> np.ndarray:
    """Cartesian polarization amplitude alpha(p) = a_+ eps^+_p + a_- eps^-_p
    at every node, shape (N, 3)."""
    e = state.grid.energies
    p_hats = state.grid.nodes / e[:, None]
    eps = polarization_basis_batch(p_hats)
    return np.einsum("ns,nsk->nk", state.amps, eps)


def effective_density_matrix(state: PhotonWavepacket) -> np.ndarray:
    """3x3 effective polarization density matrix from the transverse POVM."""
    alpha = polarization_vectors(state)
    e = state.grid.energies
    p_hats = state.grid.nodes / e[:, None]
    # b_m(p) = transverse part of the m-th axis; u_m = <b_m | alpha> = alpha_m
    b = np.eye(3)[None, :, :] - np.einsum("nm,nk->nmk", p_hats, p_hats)
    u = np.einsum("nmk,nk->nm", b, alpha)
    rho = np.einsum("n,nm,nk->mk", state.grid.weights, u, u.conj())
    return 0.5 * (rho + rho.conj().T)


def naive_density_matrix(state: PhotonWavepacket) -> np.ndarray:
    """Naive marginal sum_i w_i alpha_m alpha_n^*; equal to the POVM form."""
    alpha = polarization_vectors(state)
    return np.einsum("n,nm,nk->mk", state.grid.weights, alpha, alpha.conj())


def projection_expectation(state: PhotonWavepacket, direction) -> float:
    """Expectation of the physical part of the projector onto a (possibly
    complex) momentum-independent polarization direction."""
    d = np.asarray(direction, dtype=complex)
    d = d / np.linalg.norm(d)
    alpha = polarization_vectors(state)
    e = state.grid.energies
    p_hats = state.grid.nodes / e[:, None]
    b = d[None, :] - p_hats * (np.einsum("nk,k->n", p_hats.astype(complex), d))[:, None]
    amp = np.einsum("nk,nk->n", b.conj(), alpha)
    return float(np.sum(state.grid.weights * np.abs(amp) ** 2))


def offdiag_from_projections(state: PhotonWavepacket, m: str, n: str) -> complex:
    """Tomographic recovery of rho_mn from projection statistics:

        rho_mn = E_(m+n) + i E_(m-in) - (1+i) (E_mm + E_nn) / 2

    with E_d the expectation of the physical projector along direction d."""
    dm, dn = AXES[m], AXES[n]
    e_mm = projection_expectation(state, dm)
    e_nn = projection_expectation(state, dn)
    e_sum = projection_expectation(state, (dm + dn) / np.sqrt(2.0))
    e_imag = projection_expectation(state, (dm - 1j * dn) / np.sqrt(2.0))
    return complex(e_sum + 1j * e_imag - (1.0 + 1.0j) * (e_mm + e_nn) / 2.0)


def photon_phases_batch(lam, grid: MomentumGrid, check: bool = True):
    """Little-group parameters (beta, gamma, xi) of W(lam, p) at every node."""
    lam = np.asarray(lam, dtype=float)
    e = grid.energies
    p_hats = grid.nodes / e[:, None]
    four = np.concatenate([e[:, None], grid.nodes], axis=1)
    qfour = four @ lam.T
    q_hats = qfour[:, 1:] / qfour[:, 0][:, None]

    n = grid.n
    lp = np.zeros((n, 4, 4))
    lp[:, 1:, 1:] = _rotations_batch(p_hats)
    lp[:, 0, 0] = 1.0
    lqt = np.zeros((n, 4, 4))
    lqt[:, 1:, 1:] = np.transpose(_rotations_batch(q_hats), (0, 2, 1))
    lqt[:, 0, 0] = 1.0

    # L(p) = R(phat) B_z(E); B_z acts only in the (t, z) plane
    bz = np.zeros((n, 4, 4))
    bz[:, 1, 1] = bz[:, 2, 2] = 1.0
    bz[:, 0, 0] = bz[:, 3, 3] = 0.5 * (e + 1.0 / e)
    bz[:, 0, 3] = bz[:, 3, 0] = 0.5 * (e - 1.0 / e)
    bzq = np.zeros((n, 4, 4))
    eq = qfour[:, 0]
    bzq[:, 1, 1] = bzq[:, 2, 2] = 1.0
    bzq[:, 0, 0] = bzq[:, 3, 3] = 0.5 * (eq + 1.0 / eq)
    bzq[:, 0, 3] = bzq[:, 3, 0] = -0.5 * (eq - 1.0 / eq)

    w = bzq @ lqt @ (lam @ (lp @ bz))
    beta = w[:, 1, 0].copy()
    gamma = w[:, 2, 0].copy()
    xi = np.arctan2(w[:, 2, 1], w[:, 1, 1])
    if check:
        worst = 0.0
        for i in (0, n // 2, n - 1):
            rebuilt = null_translation(beta[i], gamma[i]) @ embed_rotation(rotation_z(xi[i]))
            worst = max(worst, float(np.max(np.abs(rebuilt - w[i]))))
        if worst > 1e-7:
            raise DomainError("little-group factorization failed; momentum off the null shell?")
    return beta, gamma, xi


def apply_boost_photon(state: PhotonWavepacket, lam) -> PhotonWavepacket:
    """Photon wavepacket in the frame reached by lam: nodes move to their
    images and helicity amplitudes pick up phases exp(+/- i xi(lam, p))."""
    lam = np.asarray(lam, dtype=float)
    _, _, xi = photon_phases_batch(lam, state.grid)
    amps = state.amps * np.stack([np.exp(1j * xi), np.exp(-1j * xi)], axis=1)
    carrier = lam @ np.array([state.k_carrier, 0.0, 0.0, state.k_carrier])
    stretch = carrier[0] / state.k_carrier
    return PhotonWavepacket(
        state.grid.boosted(lam),
        np.ascontiguousarray(amps),
        float(carrier[0]),
        state.delta_z * stretch,
        state.delta_r,
    )


def photon_error_probability(state_plus: PhotonWavepacket, state_minus: PhotonWavepacket) -> float:
    """Discrimination error of the two helicity beams through the full
    effective-density-matrix pipeline."""
    return error_probability(
        effective_density_matrix(state_plus), effective_density_matrix(state_minus)
    )


def photon_error_probability_closed_form(omega: float) -> float:
    """Leading-order error probability Omega^2 / 4 for the helicity pair."""
    return omega * omega / 4.0


def doppler_factor(v: float) -> float:
    if abs(v) >= 1:
        raise DomainError("speed must satisfy |v| < 1")
    return np.sqrt((1.0 + v) / (1.0 - v))


def doppler_transform(v: float, omega: float | None = None, pe: float | None = None) -> float:
    """Angular spread or error probability seen by an observer receding at
    speed v along the beam axis:

        Omega' = sqrt((1+v)/(1-v)) Omega,     P_E' = (1+v)/(1-v) P_E.

    Exactly one of omega / pe must be given.  P_E' is clamped at 1/2 (with a
    warning) where the leading-order scaling leaves its domain of validity."""
    if (omega is None) == (pe is None):
        raise DomainError("pass exactly one of omega or pe")
    d = doppler_factor(v)
    if omega is not None:
        return float(d * omega)
    out = d * d * pe
    if out > 0.5:
        warnings.warn("Doppler-scaled error probability exceeds 1/2; clamped", stacklevel=2)
        return 0.5
    return float(out)


def monochromatic_density_matrix(alpha_plus: complex, alpha_minus: complex) -> np.ndarray:
    """Effective density matrix of a momentum eigenstate along +z; the xy block
    is the usual pure polarization matrix and the z row and column vanish."""
    a = alpha_plus * EPS_PLUS_REF + alpha_minus * EPS_MINUS_REF
    return np.outer(a, a.conj())


def rho_plus_closed_form(omega: float) -> np.ndarray:
    """Leading-order effective matrix of the + helicity beam:
    (1 - Omega^2/2) * (circular xy block) + Omega^2/2 * |z><z|."""
    xy = 0.5 * np.array([[1.0, -1.0j, 0.0], [1.0j, 1.0, 0.0], [0.0, 0.0, 0.0]])
    zz = np.diag([0.0, 0.0, 1.0]).astype(complex)
    return (1.0 - 0.5 * omega * omega) * xy + 0.5 * omega * omega * zz
