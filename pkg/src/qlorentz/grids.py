"""Momentum-space quadrature grids.

The Lorentz-invariant measure is dmu(p) = d^3p / ((2 pi)^3 2 E(p)).  Grids
are Cartesian products in cylindrical coordinates (p_r, phi, p_z) with
Gauss-Legendre nodes and weights on each axis; the stored `weights` include
the cylindrical Jacobian and the full measure factor, so that

    sum_i weights_i f(nodes_i)  ~  integral dmu(p) f(p).

`d3p` keeps the bare coordinate-volume weights (p_r dp_r dphi dp_z) for
oracle checks against analytically known Gaussian integrals.

Boosting a grid maps nodes to their images and keeps the weights: dmu is
Lorentz invariant, so no interpolation is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

TWO_PI_CUBED = (2.0 * np.pi) ** 3


@dataclass(frozen=True)
class GridSpec:
    """Resolution of a cylindrical momentum grid; cutoff is in units of the
    relevant momentum spread."""

    n_r: int
    n_phi: int
    n_z: int
    cutoff: float = 6.0

    @classmethod
    def named(cls, name: str) -> "GridSpec":
        presets = {
            "coarse": cls(24, 16, 24),
            "default": cls(48, 32, 48),
            "fine": cls(64, 48, 64),
            "pair-coarse": cls(8, 6, 8),
            "pair-default": cls(16, 8, 16),
            "pair-fine": cls(20, 12, 20),
        }
        try:
            return presets[name.lower()]
        except KeyError:
            raise ValueError(f"unknown grid preset {name!r}") from None

    def refined(self, factor: float = 1.5) -> "GridSpec":
        return GridSpec(
            int(round(self.n_r * factor)),
            int(round(self.n_phi * factor)),
            int(round(self.n_z * factor)),
            self.cutoff,
        )


@dataclass(frozen=True)
class MomentumGrid:
    """Discretized momentum shell: spatial nodes, energies and measure weights."""

    nodes: np.ndarray      # (N, 3) spatial momenta
    energies: np.ndarray   # (N,) on-shell energies
    weights: np.ndarray    # (N,) invariant-measure weights, all > 0
    d3p: np.ndarray        # (N,) bare coordinate-volume weights

    @property
    def n(self) -> int:
        return self.nodes.shape[0]

    def boosted(self, lam: np.ndarray) -> "MomentumGrid":
        """Image grid under a Lorentz matrix; invariant weights carry over."""
        four = np.concatenate([self.energies[:, None], self.nodes], axis=1)
        out = four @ np.asarray(lam, dtype=float).T
        return replace(self, nodes=np.ascontiguousarray(out[:, 1:]), energies=out[:, 0].copy())


def _gauss_legendre(n: int, a: float, b: float):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (b + a), 0.5 * (b - a) * w


def cylindrical_nodes(
    r_max: float, z_min: float, z_max: float, spec: GridSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Product Gauss-Legendre rule for integral p_r dp_r dphi dp_z over
    [0, r_max] x [0, 2 pi] x [z_min, z_max].  Returns (nodes (N,3), d3p (N,))."""
    if r_max <= 0 or z_max <= z_min:
        raise ValueError("empty cylindrical domain")
    pr, wr = _gauss_legendre(spec.n_r, 0.0, r_max)
    phi, wphi = _gauss_legendre(spec.n_phi, 0.0, 2.0 * np.pi)
    pz, wz = _gauss_legendre(spec.n_z, z_min, z_max)

    PR, PHI, PZ = np.meshgrid(pr, phi, pz, indexing="ij")
    WR, WPHI, WZ = np.meshgrid(wr * pr, wphi, wz, indexing="ij")
    nodes = np.stack(
        [PR * np.cos(PHI), PR * np.sin(PHI), PZ], axis=-1
    ).reshape(-1, 3)
    d3p = (WR * WPHI * WZ).reshape(-1)
    return np.ascontiguousarray(nodes), d3p


def massive_grid(mass: float, delta: float, spec: GridSpec) -> MomentumGrid:
    """Cylindrical grid covering an isotropic wavepacket of spread delta around
    zero momentum, cut off at spec.cutoff * delta."""
    if mass <= 0 or delta <= 0:
        raise ValueError("mass and spread must be positive")
    c = spec.cutoff * delta
    nodes, d3p = cylindrical_nodes(c, -c, c, spec)
    energies = np.sqrt(mass * mass + np.einsum("ij,ij->i", nodes, nodes))
    weights = d3p / (TWO_PI_CUBED * 2.0 * energies)
    return MomentumGrid(nodes, energies, weights, d3p)


def photon_beam_grid(
    k_carrier: float, delta_z: float, delta_r: float, spec: GridSpec
) -> MomentumGrid:
    """Null-shell grid around a beam along +z with radial spread delta_r and
    longitudinal spread delta_z about carrier momentum k_carrier."""
    if k_carrier <= 0 or delta_z <= 0 or delta_r <= 0:
        raise ValueError("beam parameters must be positive")
    z_lo = k_carrier - spec.cutoff * delta_z
    if z_lo <= 0:
        raise ValueError("longitudinal spread reaches p_z <= 0; beam not paraxial")
    nodes, d3p = cylindrical_nodes(
        spec.cutoff * delta_r, z_lo, k_carrier + spec.cutoff * delta_z, spec
    )
    energies = np.sqrt(np.einsum("ij,ij->i", nodes, nodes))
    weights = d3p / (TWO_PI_CUBED * 2.0 * energies)
    return MomentumGrid(nodes, energies, weights, d3p)
