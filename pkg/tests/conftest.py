import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240612)


def random_unit_vector(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_velocity(rng, vmax: float = 0.95) -> np.ndarray:
    return rng.uniform(0.05, vmax) * random_unit_vector(rng)


def random_rotation(rng) -> np.ndarray:
    from qlorentz.lorentz import rotation_about

    return rotation_about(random_unit_vector(rng), rng.uniform(0.0, np.pi))


def random_lorentz(rng) -> np.ndarray:
    from qlorentz.lorentz import boost_from_velocity, embed_rotation

    return boost_from_velocity(random_velocity(rng)) @ embed_rotation(random_rotation(rng))


def random_density_matrix(rng, dim: int) -> np.ndarray:
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = z @ z.conj().T
    return rho / np.trace(rho).real


def random_pure_state(rng, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
