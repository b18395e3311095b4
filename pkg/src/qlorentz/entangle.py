"""Two-particle spin states under boosts: spin-spin marginals, concurrence,
and CHSH correlations with momentum-dependent measurement operators.

The two-particle amplitude tensor g(s1, s2, i, j) lives on a product of
per-particle momentum grids.  Boosts act slot by slot with the same Wigner
machinery as the single-particle case, so the full-state entanglement across
the particle cut is exactly preserved while the spin-spin marginal is not.

Bipartite measurement directions enter through the auxiliary vector

    alpha(a, p) = (m/p0) a + (1 - m/p0) (a.n) n,      n = p/|p|,

whose length sqrt((p.a)^2 + m^2)/p0 <= 1 scales down CHSH correlators for a
moving observer; rotating the measurement directions by the Wigner rotation
(and reading them as ideal spin observables) restores the rest-frame value.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .grids import GridSpec, MomentumGrid, massive_grid
from .lorentz import DomainError, PAULI, little_group_element, massive_momentum

SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)


@dataclass(frozen=True)
class TwoParticleState:
    """Distinguishable pair of equal-mass spin-1/2 particles; amps has shape
    (2, 2, N1, N2) indexed (spin1, spin2, node1, node2)."""

    mass: float
    grid1: MomentumGrid
    grid2: MomentumGrid
    amps: np.ndarray

    def norm(self) -> float:
        g = self.amps.reshape(4, self.grid1.n, self.grid2.n)
        per_node = np.einsum("aij,aij->ij", g, g.conj()).real
        return float(self.grid1.weights @ per_node @ self.grid2.weights)


@dataclass(frozen=True)
class CHSHSettings:
    """Measurement directions for the two sides, plus the sharp momentum and
    mass context used to build the momentum-dependent operators.  A zero (or
    None) momentum means ideal rest-frame spin observables."""

    a1: np.ndarray
    a2: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    p_a: np.ndarray | None = None
    p_b: np.ndarray | None = None
    mass: float = 1.0


def _unit(v):
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > 1e-12:
        raise DomainError("measurement direction must be a unit vector")
    return v / n


def two_particle_gaussian(
    mass: float, delta: float, spin_state, spec: GridSpec | None = None
) -> TwoParticleState:
    """Product of two Gaussian momentum packets with a shared 4-component spin
    state; unit norm on the product grid."""
    spin = np.asarray(spin_state, dtype=complex)
    if spin.shape != (4,) or abs(np.linalg.norm(spin) - 1.0) > 1e-10:
        raise DomainError("spin state must be a normalized 4-vector")
    spec = spec or GridSpec.named("pair-default")
    grid = massive_grid(mass, delta, spec)
    psi = np.exp(-np.einsum("ni,ni->n", grid.nodes, grid.nodes) / (2.0 * delta * delta))
    psi = psi / np.sqrt(np.sum(grid.weights * psi * psi))
    amps = np.einsum("a,i,j->aij", spin, psi, psi).reshape(2, 2, grid.n, grid.n)
    return TwoParticleState(mass, grid, grid, np.ascontiguousarray(amps))


def apply_boost_pair(state: TwoParticleState, lam) -> TwoParticleState:
    """Boost both particles: U(lam) x U(lam) on the discretized state."""
    lam = np.asarray(lam, dtype=float)
    _, d1 = _kernels.wigner_d_batch(lam, state.mass, state.grid1.nodes)
    if state.grid2 is state.grid1:
        d2 = d1
    else:
        _, d2 = _kernels.wigner_d_batch(lam, state.mass, state.grid2.nodes)
    amps = _kernels.pair_apply(d1, d2, state.amps)
    return TwoParticleState(
        state.mass, state.grid1.boosted(lam), state.grid2.boosted(lam), amps
    )


def spin_spin_dm(state: TwoParticleState) -> np.ndarray:
    """4x4 spin-spin density matrix: both momenta traced out."""
    rho = _kernels.pair_spin_density(state.grid1.weights, state.grid2.weights, state.amps)
    return 0.5 * (rho + rho.conj().T)


def bipartition_entropy(state: TwoParticleState) -> float:
    """Entanglement entropy (bits) of the particle-1 vs particle-2 cut of the
    full discretized state, momenta included."""
    g = state.amps * np.sqrt(state.grid1.weights)[None, None, :, None]
    g = g * np.sqrt(state.grid2.weights)[None, None, None, :]
    m = g.transpose(0, 2, 1, 3).reshape(2 * state.grid1.n, 2 * state.grid2.n)
    s = np.linalg.svd(m, compute_uv=False)
    lam = s * s
    lam = lam[lam > 1e-300] / lam.sum()
    return float(-(lam * np.log2(lam)).sum())


def concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    yy = np.kron(PAULI[1], PAULI[1])
    rt = rho @ yy @ rho.conj() @ yy
    lam = np.sort(np.sqrt(np.clip(np.linalg.eigvals(rt).real, 0.0, None)))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def alpha_vector(a, p3, mass: float) -> np.ndarray:
    """Auxiliary direction alpha(a, p) = (m/p0) a + (1 - m/p0) (a.n) n."""
    a = _unit(a)
    p3 = np.asarray(p3, dtype=float)
    pmag = np.linalg.norm(p3)
    if pmag == 0.0:
        return a
    e = np.hypot(mass, pmag)
    n = p3 / pmag
    return (mass / e) * a + (1.0 - mass / e) * (a @ n) * n


def chsh_operator(a, p3, mass: float) -> np.ndarray:
    """Spin observable 2 alpha(a, p) . S = alpha . sigma for a detector set
    along a on a particle of sharp momentum p."""
    al = alpha_vector(a, p3 if p3 is not None else np.zeros(3), mass)
    return np.einsum("k,kij->ij", al, PAULI)


def chsh_value(settings: CHSHSettings, rho) -> float:
    """zeta = |<A1 (B1 + B2)> + <A2 (B1 - B2)>| / 2 on a spin-spin state.

    Classical bound 1; quantum bound sqrt(2) when all |alpha| = 1."""
    rho = np.asarray(rho, dtype=complex)
    pa = settings.p_a if settings.p_a is not None else np.zeros(3)
    pb = settings.p_b if settings.p_b is not None else np.zeros(3)
    a_ops = [chsh_operator(settings.a1, pa, settings.mass), chsh_operator(settings.a2, pa, settings.mass)]
    b_ops = [chsh_operator(settings.b1, pb, settings.mass), chsh_operator(settings.b2, pb, settings.mass)]

    def corr(a_op, b_op):
        return float(np.real(np.trace(rho @ np.kron(a_op, b_op))))

    return abs(
        corr(a_ops[0], b_ops[0]) + corr(a_ops[0], b_ops[1])
        + corr(a_ops[1], b_ops[0]) - corr(a_ops[1], b_ops[1])
    ) / 2.0


def optimal_rest_settings() -> CHSHSettings:
    """Rest-frame settings maximally violating CHSH on the singlet."""
    s2 = 1.0 / np.sqrt(2.0)
    return CHSHSettings(
        a1=np.array([1.0, 0.0, 0.0]),
        a2=np.array([0.0, 1.0, 0.0]),
        b1=np.array([s2, s2, 0.0]),
        b2=np.array([s2, -s2, 0.0]),
    )


def compensate_settings(lam, p1, p2, mass: float, settings: CHSHSettings) -> CHSHSettings:
    """Counter the Wigner rotations of a boost at sharp momenta p1, p2.

    Each side's directions are carried along by W(lam, p_i) and the returned
    settings use ideal spin observables (zero momentum context), so measuring
    the boosted state reproduces the unboosted CHSH value."""
    lam = np.asarray(lam, dtype=float)
    w1 = little_group_element(lam, massive_momentum(mass, p1), "massive")[1:, 1:]
    w2 = little_group_element(lam, massive_momentum(mass, p2), "massive")[1:, 1:]
    return replace(
        settings,
        a1=w1 @ _unit(settings.a1),
        a2=w1 @ _unit(settings.a2),
        b1=w2 @ _unit(settings.b1),
        b2=w2 @ _unit(settings.b2),
        p_a=None,
        p_b=None,
        mass=mass,
    )


def boosted_sharp_singlet(lam, p1, p2, mass: float) -> np.ndarray:
    """Spin-spin state of a singlet at sharp momenta p1, p2 after a boost:
    (D[W(lam,p1)] x D[W(lam,p2)]) |singlet>."""
    from .lorentz import wigner_D_from_rotation

    lam = np.asarray(lam, dtype=float)
    d1 = wigner_D_from_rotation(little_group_element(lam, massive_momentum(mass, p1), "massive")[1:, 1:])
    d2 = wigner_D_from_rotation(little_group_element(lam, massive_momentum(mass, p2), "massive")[1:, 1:])
    psi = np.kron(d1, d2) @ SINGLET
    return np.outer(psi, psi.conj())


def anticommutes(op1, op2, tol: float = 1e-10) -> bool:
    """Predicate for the maximal-violation algebra A1 A2 + A2 A1 = 0."""
    op1 = np.asarray(op1, dtype=complex)
    op2 = np.asarray(op2, dtype=complex)
    return bool(np.max(np.abs(op1 @ op2 + op2 @ op1)) <= tol)
