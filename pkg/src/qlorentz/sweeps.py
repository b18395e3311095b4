"""Sweep drivers behind the CLI: metric-vs-parameter tables for the massive,
photon and entanglement pipelines, with the closed forms alongside the full
numerics."""

from __future__ import annotations

import numpy as np

from . import entangle, massive, photon
from .grids import GridSpec
from .lorentz import boost_from_velocity
from .results import SweepResult

__all__ = [
    "SweepResult",
    "massive_distinguish_sweep",
    "photon_doppler_sweep",
    "chsh_sweep",
]


def massive_distinguish_sweep(
    delta_over_m: float,
    v_list,
    theta: float = 0.0,
    spec: GridSpec | None = None,
) -> SweepResult:
    """Columns gamma, pe_closed, pe_numeric, fidelity_closed, fidelity_numeric.

    pe compares the two boosted basis spinors; fidelity uses the spinor
    (cos theta, sin theta).  Rows ascend in gamma (one per speed)."""
    spec = spec or GridSpec.named("default")
    mass = 1.0
    rows = []
    for v in sorted(float(v) for v in v_list):
        case = massive.BoostScenario.make(delta_over_m, v, theta)
        g = case.gamma_param
        lam = boost_from_velocity([0.0, 0.0, v]) if v else np.eye(4)

        def boosted_dm(chi):
            state = massive.gaussian_wavepacket(mass, case.delta_over_m * mass, chi, spec)
            if v:
                state = massive.apply_boost(state, lam)
            return massive.reduced_spin_dm(state)

        pe_num = massive.error_probability(boosted_dm([1.0, 0.0]), boosted_dm([0.0, 1.0]))
        f_num = massive.fidelity(case.spinor(), boosted_dm(case.spinor()))
        rows.append(
            (g, g * g / 4.0, pe_num, massive.fidelity_closed_form(theta, g), f_num)
        )
    return SweepResult(
        ("gamma", "pe_closed", "pe_numeric", "fidelity_closed", "fidelity_numeric"),
        rows,
        provenance={
            "delta_over_m": delta_over_m,
            "theta": theta,
            "grid": [spec.n_r, spec.n_phi, spec.n_z],
        },
    )


def photon_doppler_sweep(
    omega_list,
    v_list,
    k_carrier: float = 1.0,
    dz_over_dr: float = 0.2,
    spec: GridSpec | None = None,
) -> SweepResult:
    """Columns omega, v, pe_closed, pe_numeric.

    For each beam spread Omega and observer speed v along the beam axis, the
    closed form is the Doppler-scaled Omega^2/4; the numeric value runs the
    boosted helicity pair through the effective-density-matrix pipeline."""
    spec = spec or GridSpec.named("default")
    rows = []
    for omega in sorted(float(o) for o in omega_list):
        dr = omega * k_carrier
        plus = photon.gaussian_photon(k_carrier, dz_over_dr * dr, dr, +1, spec)
        minus = photon.gaussian_photon(k_carrier, dz_over_dr * dr, dr, -1, spec)
        for v in sorted(float(v) for v in v_list):
            pe_closed = photon.doppler_transform(
                v, pe=photon.photon_error_probability_closed_form(omega)
            )
            if v:
                lam = boost_from_velocity([0.0, 0.0, -v])
                pe_num = photon.photon_error_probability(
                    photon.apply_boost_photon(plus, lam),
                    photon.apply_boost_photon(minus, lam),
                )
            else:
                pe_num = photon.photon_error_probability(plus, minus)
            rows.append((omega, v, pe_closed, pe_num))
    return SweepResult(
        ("omega", "v", "pe_closed", "pe_numeric"),
        rows,
        provenance={
            "k_carrier": k_carrier,
            "dz_over_dr": dz_over_dr,
            "grid": [spec.n_r, spec.n_phi, spec.n_z],
        },
    )


def chsh_sweep(
    v_list,
    delta_over_m: float = 0.05,
    spec: GridSpec | None = None,
) -> SweepResult:
    """Columns v, zeta_uncompensated, zeta_compensated, concurrence.

    zeta columns use the sharp-momentum picture: a rest-frame singlet pair
    boosted along z, measured with the momentum-dependent operators (left as
    prepared, or Wigner-compensated).  The concurrence column runs the
    Gaussian-packet pipeline at the given delta_over_m."""
    spec = spec or GridSpec.named("pair-default")
    mass = 1.0
    settings = entangle.optimal_rest_settings()
    rest = np.zeros(3)
    packet = entangle.two_particle_gaussian(mass, delta_over_m * mass, entangle.SINGLET, spec)
    rows = []
    for v in sorted(float(v) for v in v_list):
        if v:
            lam = boost_from_velocity([0.0, 0.0, v])
            rho_sharp = entangle.boosted_sharp_singlet(lam, rest, rest, mass)
            q = lam @ np.array([mass, 0.0, 0.0, 0.0])
            uncomp = entangle.CHSHSettings(
                settings.a1, settings.a2, settings.b1, settings.b2,
                p_a=q[1:], p_b=q[1:], mass=mass,
            )
            comp = entangle.compensate_settings(lam, rest, rest, mass, settings)
            boosted_packet = entangle.apply_boost_pair(packet, lam)
        else:
            rho_sharp = np.outer(entangle.SINGLET, entangle.SINGLET)
            uncomp = settings
            comp = settings
            boosted_packet = packet
        rows.append(
            (
                v,
                entangle.chsh_value(uncomp, rho_sharp),
                entangle.chsh_value(comp, rho_sharp),
                entangle.concurrence(entangle.spin_spin_dm(boosted_packet)),
            )
        )
    return SweepResult(
        ("v", "zeta_uncompensated", "zeta_compensated", "concurrence"),
        rows,
        provenance={
            "delta_over_m": delta_over_m,
            "grid": [spec.n_r, spec.n_phi, spec.n_z],
        },
    )
