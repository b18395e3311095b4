"""Density-matrix utilities shared by the massive, photon and entanglement
pipelines: validation, von Neumann entropy, and the minimum-error
discrimination probability."""

from __future__ import annotations

import numpy as np


def check_density_matrix(rho, tol: float = 1e-8, trace_tol: float | None = None) -> np.ndarray:
    """Validate Hermiticity, unit trace and positive semidefiniteness."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > (trace_tol if trace_tol is not None else tol):
        raise ValueError("density matrix trace is not 1")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def vn_entropy(rho, base: float = 2.0) -> float:
    """von Neumann entropy -sum lambda log lambda; 0 log 0 := 0.

    Defaults to bits (base 2)."""
    vals = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    vals = np.clip(vals.real, 0.0, None)
    nz = vals[vals > 0]
    return float(-(nz * (np.log(nz) / np.log(base))).sum())


def error_probability(rho1, rho2) -> float:
    """Minimum probability of error when discriminating two equiprobable
    states: 1/2 - (1/4) tr sqrt((rho1 - rho2)^2) = 1/2 - (1/4) sum |eig|."""
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    if rho1.shape != rho2.shape:
        raise ValueError("density matrices must have equal dimensions")
    eig = np.linalg.eigvalsh(rho1 - rho2)
    return float(0.5 - 0.25 * np.abs(eig).sum())


def trace_distance(rho1, rho2) -> float:
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    return float(0.5 * np.abs(np.linalg.eigvalsh(rho1 - rho2)).sum())
