"""Classical Lorentz-group machinery for spin-1/2 and helicity qubits.

Conventions (natural units, hbar = c = 1):

* Four-vectors are length-4 numpy arrays ``(t, x, y, z)`` with metric
  signature ``(+, -, -, -)``.
* Reference momenta: ``(m, 0, 0, 0)`` for a massive particle of mass ``m``
  and ``(1, 0, 0, 1)`` for a photon.
* ``standard_boost_massive(p, m)`` is the rotation-free boost L(p) taking
  the massive reference momentum to ``(E, p)``.
* ``standard_transform_photon(p)`` is L(p) = R(phat) B_z(u), a pure z-boost
  to energy |p| followed by the standard rotation carrying zhat to phat.
* The little-group element W(Lam, p) = L(Lam p)^-1 Lam L(p) fixes the
  reference momentum.  For massive particles it is a rotation; its spin-1/2
  representative is D = exp(-i (omega/2) n.sigma) where (n, omega) are the
  SO(3) axis and angle of W.  For photons W factors as S(beta, gamma) R_z(xi)
  with S a null translation and only xi physical.

All functions are pure and operate on immutable inputs; none keep state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

MASSLESS_REFERENCE = np.array([1.0, 0.0, 0.0, 1.0])

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([PAULI_X, PAULI_Y, PAULI_Z])

CONSTRUCTOR_TOL = 1e-10
DERIVED_TOL = 1e-8


class DomainError(ValueError):
    """Raised when an input violates a documented precondition."""


@dataclass(frozen=True)
class AxisAngle:
    """Rotation axis (unit 3-vector) and angle in [0, pi]."""

    axis: np.ndarray
    angle: float


@dataclass(frozen=True)
class MasslessLittleGroupParams:
    """E(2) parameters of a photon little-group element W = S(beta, gamma) R_z(xi)."""

    beta: float
    gamma: float
    xi: float


def minkowski_dot(p, q) -> float:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return float(p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3])


def mass_squared(p) -> float:
    return minkowski_dot(p, p)


def massive_momentum(m: float, p3) -> np.ndarray:
    """On-shell four-momentum (sqrt(p^2 + m^2), p) for spatial momentum p3."""
    p3 = np.asarray(p3, dtype=float)
    return np.concatenate(([np.hypot(m, np.linalg.norm(p3))], p3))


def photon_momentum(p3) -> np.ndarray:
    """Null four-momentum (|p|, p)."""
    p3 = np.asarray(p3, dtype=float)
    return np.concatenate(([np.linalg.norm(p3)], p3))


def check_four_momentum(p, m: float, tol: float = DERIVED_TOL) -> None:
    """Validate t > 0 and the mass-shell (m > 0) or null-shell (m = 0) condition."""
    p = np.asarray(p, dtype=float)
    if p.shape != (4,):
        raise DomainError("four-momentum must have shape (4,)")
    if p[0] <= 0:
        raise DomainError("four-momentum must have positive energy")
    scale = max(1.0, p[0] ** 2)
    if abs(mass_squared(p) - m * m) > tol * scale:
        raise DomainError(f"momentum off shell for mass {m}")


def is_lorentz(lam, tol: float = CONSTRUCTOR_TOL) -> bool:
    """True iff lam is proper orthochronous: Lam^T eta Lam = eta, det = +1, Lam[0,0] >= 1."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (4, 4):
        return False
    if np.max(np.abs(lam.T @ ETA @ lam - ETA)) > tol:
        return False
    return np.linalg.det(lam) > 0 and lam[0, 0] >= 1.0 - tol


def is_rotation(r, tol: float = CONSTRUCTOR_TOL) -> bool:
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3):
        return False
    return np.max(np.abs(r.T @ r - np.eye(3))) <= tol and np.linalg.det(r) > 0


def embed_rotation(r) -> np.ndarray:
    """Promote a 3x3 rotation to the 4x4 Lorentz matrix acting on space only."""
    lam = np.eye(4)
    lam[1:, 1:] = np.asarray(r, dtype=float)
    return lam


def boost_from_velocity(v) -> np.ndarray:
    """Pure boost with 3-velocity v (|v| < 1).

    Applied to (m, 0, 0, 0) it gives (gamma m, gamma m v).
    """
    v = np.asarray(v, dtype=float)
    v2 = float(v @ v)
    if v2 >= (1.0 - 1e-12) ** 2:
        raise DomainError("superluminal velocity")
    if v2 == 0.0:
        return np.eye(4)
    g = 1.0 / np.sqrt(1.0 - v2)
    lam = np.eye(4)
    lam[0, 0] = g
    lam[0, 1:] = g * v
    lam[1:, 0] = g * v
    lam[1:, 1:] += (g - 1.0) * np.outer(v, v) / v2
    return lam


def standard_boost_massive(p3, m: float) -> np.ndarray:
    """Rotation-free boost L(p) taking (m, 0, 0, 0) to (E(p), p).

    Entries: L[0,0] = E/m, L[0,i] = L[i,0] = p_i/m,
    L[i,j] = delta_ij + p_i p_j / (m (m + E)).
    """
    if m <= 0:
        raise DomainError("mass must be positive")
    p3 = np.asarray(p3, dtype=float)
    e = np.hypot(m, np.linalg.norm(p3))
    lam = np.eye(4)
    lam[0, 0] = e / m
    lam[0, 1:] = p3 / m
    lam[1:, 0] = p3 / m
    lam[1:, 1:] += np.outer(p3, p3) / (m * (m + e))
    return lam


def inverse_standard_boost_massive(p3, m: float) -> np.ndarray:
    # L(p)^-1 = L(-p) for the rotation-free boost.
    return standard_boost_massive(-np.asarray(p3, dtype=float), m)


def standard_rotation(p_hat) -> np.ndarray:
    """Rotation R(phat) carrying zhat to phat: R_z(phi) R_y(theta).

    (theta, phi) are the polar and azimuthal angles of phat.
    """
    p_hat = np.asarray(p_hat, dtype=float)
    if abs(np.linalg.norm(p_hat) - 1.0) > CONSTRUCTOR_TOL:
        raise DomainError("direction must be a unit vector")
    ct = np.clip(p_hat[2], -1.0, 1.0)
    st = np.hypot(p_hat[0], p_hat[1])
    if st < 1e-300:
        cp, sp = 1.0, 0.0
    else:
        cp, sp = p_hat[0] / st, p_hat[1] / st
    return np.array(
        [
            [ct * cp, -sp, cp * st],
            [ct * sp, cp, sp * st],
            [-st, 0.0, ct],
        ]
    )


def rotation_about(axis, angle: float) -> np.ndarray:
    """Rodrigues rotation by angle about a unit axis."""
    axis = np.asarray(axis, dtype=float)
    n = np.linalg.norm(axis)
    if n == 0:
        raise DomainError("rotation axis must be nonzero")
    axis = axis / n
    k = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)


def rotation_z(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def boost_z_to_energy(e: float) -> np.ndarray:
    """Pure z-boost B_z(u) taking (1, 0, 0, 1) to (e, 0, 0, e)."""
    if e <= 0:
        raise DomainError("photon energy must be positive")
    # Doppler factor exp(rapidity) = e; on a null z-momentum B_z acts by scaling.
    ch = 0.5 * (e + 1.0 / e)
    sh = 0.5 * (e - 1.0 / e)
    lam = np.eye(4)
    lam[0, 0] = ch
    lam[0, 3] = sh
    lam[3, 0] = sh
    lam[3, 3] = ch
    return lam


def standard_transform_photon(p) -> np.ndarray:
    """L(p) = R(phat) B_z(u) taking the photon reference momentum to p."""
    p = np.asarray(p, dtype=float)
    check_four_momentum(p, 0.0)
    e = p[0]
    p_hat = p[1:] / np.linalg.norm(p[1:])
    return embed_rotation(standard_rotation(p_hat)) @ boost_z_to_energy(e)


def inverse_standard_transform_photon(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    check_four_momentum(p, 0.0)
    p_hat = p[1:] / np.linalg.norm(p[1:])
    return boost_z_to_energy(1.0 / p[0]) @ embed_rotation(standard_rotation(p_hat).T)


def little_group_element(lam, p, kind: str) -> np.ndarray:
    """W(Lam, p) = L(Lam p)^-1 Lam L(p); it fixes the reference momentum.

    kind is "massive" (p on a positive mass shell) or "massless" (p null).
    """
    lam = np.asarray(lam, dtype=float)
    p = np.asarray(p, dtype=float)
    if kind == "massive":
        m2 = mass_squared(p)
        if m2 <= 0 or p[0] <= 0:
            raise DomainError("momentum is not on a positive mass shell")
        m = np.sqrt(m2)
        check_four_momentum(p, m)
        q = lam @ p
        return inverse_standard_boost_massive(q[1:], m) @ lam @ standard_boost_massive(p[1:], m)
    if kind == "massless":
        check_four_momentum(p, 0.0)
        q = lam @ p
        return inverse_standard_transform_photon(q) @ lam @ standard_transform_photon(p)
    raise DomainError(f"unknown particle kind: {kind!r}")


def rotation_axis_angle(r) -> AxisAngle:
    """Axis-angle decomposition of a rotation matrix, angle in [0, pi].

    Conventions: the identity maps to (zhat, 0); at angle pi the axis sign is
    fixed by making its first nonzero component positive.
    """
    r = np.asarray(r, dtype=float)
    if not is_rotation(r, tol=1e-8):
        raise DomainError("input is not a rotation matrix")
    w, x, y, z = _rotation_to_quaternion(r)
    vec = np.array([x, y, z])
    s = np.linalg.norm(vec)
    if s < 1e-15:
        return AxisAngle(np.array([0.0, 0.0, 1.0]), 0.0)
    axis = vec / s
    angle = 2.0 * np.arctan2(s, w)
    if np.pi - angle < 1e-12:
        # angle pi: (n, pi) and (-n, pi) coincide; pick a deterministic sign
        for c in axis:
            if abs(c) > 1e-12:
                if c < 0:
                    axis = -axis
                break
        angle = float(np.pi)
    return AxisAngle(axis, float(angle))


def _rotation_to_quaternion(r) -> tuple[float, float, float, float]:
    """Unit quaternion (w, x, y, z) with w >= 0 for a rotation matrix.

    Shepperd-style branch selection on the largest of (trace, diagonal) keeps
    the extraction stable for angles near 0 and pi.
    """
    t = r[0, 0] + r[1, 1] + r[2, 2]
    if t > max(r[0, 0], r[1, 1], r[2, 2]):
        s = np.sqrt(1.0 + t) * 2.0
        w = 0.25 * s
        x = (r[2, 1] - r[1, 2]) / s
        y = (r[0, 2] - r[2, 0]) / s
        z = (r[1, 0] - r[0, 1]) / s
    elif r[0, 0] >= r[1, 1] and r[0, 0] >= r[2, 2]:
        s = np.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2]) * 2.0
        w = (r[2, 1] - r[1, 2]) / s
        x = 0.25 * s
        y = (r[0, 1] + r[1, 0]) / s
        z = (r[0, 2] + r[2, 0]) / s
    elif r[1, 1] >= r[2, 2]:
        s = np.sqrt(1.0 - r[0, 0] + r[1, 1] - r[2, 2]) * 2.0
        w = (r[0, 2] - r[2, 0]) / s
        x = (r[0, 1] + r[1, 0]) / s
        y = 0.25 * s
        z = (r[1, 2] + r[2, 1]) / s
    else:
        s = np.sqrt(1.0 - r[0, 0] - r[1, 1] + r[2, 2]) * 2.0
        w = (r[1, 0] - r[0, 1]) / s
        x = (r[0, 2] + r[2, 0]) / s
        y = (r[1, 2] + r[2, 1]) / s
        z = 0.25 * s
    if w < 0:
        w, x, y, z = -w, -x, -y, -z
    n = np.sqrt(w * w + x * x + y * y + z * z)
    return w / n, x / n, y / n, z / n


def wigner_D_half(aa: AxisAngle) -> np.ndarray:
    """Spin-1/2 representative exp(-i (angle/2) axis.sigma) of a rotation.

    angle is the SO(3) rotation angle; the representation carries the usual
    spinor half-angle and is defined up to a global sign (projective).
    """
    axis = np.asarray(aa.axis, dtype=float)
    if abs(np.linalg.norm(axis) - 1.0) > 1e-12:
        raise DomainError("axis must be a unit vector")
    half = 0.5 * aa.angle
    c, s = np.cos(half), np.sin(half)
    nx, ny, nz = axis
    return np.array(
        [
            [c - 1j * s * nz, -1j * s * nx - s * ny],
            [-1j * s * nx + s * ny, c + 1j * s * nz],
        ]
    )


def wigner_D_from_rotation(r) -> np.ndarray:
    """Spin-1/2 representative of a rotation matrix via quaternion extraction."""
    w, x, y, z = _rotation_to_quaternion(np.asarray(r, dtype=float))
    return np.array(
        [
            [w - 1j * z, -1j * x - y],
            [-1j * x + y, w + 1j * z],
        ]
    )


def wigner_axis_angle_massive(v, p3, m: float) -> AxisAngle:
    """Axis and angle of the Wigner rotation for a pure boost of velocity v
    acting on a massive-particle momentum p3.

    Degenerate case p || v (or p = 0): returns angle 0 with the conventional
    zhat axis, since the rotation is trivial there.
    """
    lam = boost_from_velocity(v)
    p = massive_momentum(m, p3)
    w = little_group_element(lam, p, "massive")
    return rotation_axis_angle(w[1:, 1:])


def wigner_angle_leading_order(v, p3, m: float) -> float:
    """First-order Wigner angle (1 - sqrt(1 - v^2))/v * (|p|/m) * sin(theta),
    theta being the angle between the boost velocity and the momentum."""
    v = np.asarray(v, dtype=float)
    p3 = np.asarray(p3, dtype=float)
    speed = np.linalg.norm(v)
    pmag = np.linalg.norm(p3)
    if speed == 0.0 or pmag == 0.0:
        return 0.0
    sin_theta = np.linalg.norm(np.cross(v / speed, p3 / pmag))
    return float((1.0 - np.sqrt(1.0 - speed**2)) / speed * (pmag / m) * sin_theta)


def null_translation(beta: float, gamma: float) -> np.ndarray:
    """E(2) 'translation' S(beta, gamma) of the massless little group.

    Fixes the reference momentum (1, 0, 0, 1).
    """
    zeta = 0.5 * (beta * beta + gamma * gamma)
    return np.array(
        [
            [1.0 + zeta, beta, gamma, -zeta],
            [beta, 1.0, 0.0, -beta],
            [gamma, 0.0, 1.0, -gamma],
            [zeta, beta, gamma, 1.0 - zeta],
        ]
    )


def photon_wigner_phase(lam, p) -> MasslessLittleGroupParams:
    """Factor W(Lam, p) = S(beta, gamma) R_z(xi) and return (beta, gamma, xi).

    Only xi is physical: helicity amplitudes pick up exp(+/- i xi).  The
    reconstruction S(beta, gamma) R_z(xi) == W is checked to 1e-8.
    """
    w = little_group_element(lam, p, "massless")
    beta = float(w[1, 0])
    gamma = float(w[2, 0])
    xi = float(np.arctan2(w[2, 1], w[1, 1]))
    rebuilt = null_translation(beta, gamma) @ embed_rotation(rotation_z(xi))
    if np.max(np.abs(rebuilt - w)) > DERIVED_TOL:
        raise DomainError("little-group element is not of E(2) form")
    return MasslessLittleGroupParams(beta, gamma, xi)
