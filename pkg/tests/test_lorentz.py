import numpy as np
import pytest

from conftest import random_lorentz, random_rotation, random_unit_vector, random_velocity
from qlorentz import lorentz as lz


class TestBoostFromVelocity:
    def test_zero_velocity_is_identity(self):
        assert np.allclose(lz.boost_from_velocity([0, 0, 0]), np.eye(4))

    def test_z_boost_entries(self):
        # gamma = 1/sqrt(1 - 0.36) = 1.25, gamma v = 0.75
        lam = lz.boost_from_velocity([0, 0, 0.6])
        assert lam[0, 0] == pytest.approx(1.25, abs=1e-14)
        assert lam[0, 3] == pytest.approx(0.75, abs=1e-14)
        assert lam[3, 0] == pytest.approx(0.75, abs=1e-14)
        assert lam[3, 3] == pytest.approx(1.25, abs=1e-14)

    def test_metric_preserved(self, rng):
        for _ in range(50):
            lam = lz.boost_from_velocity(random_velocity(rng))
            assert np.max(np.abs(lam.T @ lz.ETA @ lam - lz.ETA)) < 1e-10

    def test_superluminal_rejected(self):
        with pytest.raises(lz.DomainError):
            lz.boost_from_velocity([0.8, 0.8, 0.8])


class TestStandardBoost:
    def test_rest_momentum_identity(self):
        assert np.allclose(lz.standard_boost_massive([0, 0, 0], 2.0), np.eye(4))

    def test_reference_to_target(self):
        # E = sqrt(9 + 16) = 5
        lam = lz.standard_boost_massive([0, 0, 3], 4.0)
        assert np.allclose(lam @ np.array([4.0, 0, 0, 0]), [5.0, 0, 0, 3.0], atol=1e-10)

    def test_top_left_entry_is_energy_ratio(self, rng):
        for _ in range(20):
            p = rng.normal(size=3)
            m = rng.uniform(0.5, 4.0)
            e = np.hypot(m, np.linalg.norm(p))
            assert lz.standard_boost_massive(p, m)[0, 0] == pytest.approx(e / m, rel=1e-12)

    def test_inverse(self, rng):
        p = rng.normal(size=3)
        lam = lz.standard_boost_massive(p, 1.5)
        assert np.allclose(lam @ lz.inverse_standard_boost_massive(p, 1.5), np.eye(4), atol=1e-12)

    def test_nonpositive_mass_rejected(self):
        with pytest.raises(lz.DomainError):
            lz.standard_boost_massive([1, 0, 0], 0.0)


class TestStandardRotation:
    def test_z_axis_identity(self):
        assert np.allclose(lz.standard_rotation([0, 0, 1]), np.eye(3))

    def test_x_axis(self):
        r = lz.standard_rotation([1, 0, 0])
        assert np.allclose(r @ [0, 0, 1], [1, 0, 0], atol=1e-14)
        assert np.allclose(r @ [1, 0, 0], [0, 0, -1], atol=1e-14)
        assert np.allclose(r @ [0, 1, 0], [0, 1, 0], atol=1e-14)

    def test_carries_z_to_direction(self, rng):
        for _ in range(100):
            p_hat = random_unit_vector(rng)
            r = lz.standard_rotation(p_hat)
            assert np.max(np.abs(r @ [0, 0, 1] - p_hat)) < 1e-10
            assert lz.is_rotation(r)

    def test_non_unit_rejected(self):
        with pytest.raises(lz.DomainError):
            lz.standard_rotation([0, 0, 2])


class TestPhotonStandardTransform:
    def test_reference_momentum_identity(self):
        assert np.allclose(lz.standard_transform_photon([1.0, 0, 0, 1.0]), np.eye(4), atol=1e-12)

    def test_pure_z_scaling(self):
        lam = lz.standard_transform_photon([2.0, 0, 0, 2.0])
        # Doppler factor 2 along z, no rotation part
        assert np.allclose(lam @ lz.MASSLESS_REFERENCE, [2.0, 0, 0, 2.0], atol=1e-12)
        assert np.allclose(lam[1:3, 1:3], np.eye(2), atol=1e-12)

    def test_generic_target(self, rng):
        for _ in range(50):
            p = lz.photon_momentum(rng.normal(size=3))
            lam = lz.standard_transform_photon(p)
            assert np.max(np.abs(lam @ lz.MASSLESS_REFERENCE - p)) < 1e-10
            assert lz.is_lorentz(lam)

    def test_massive_momentum_rejected(self):
        with pytest.raises(lz.DomainError):
            lz.standard_transform_photon([2.0, 0, 0, 1.0])


class TestLittleGroup:
    def test_identity(self, rng):
        p = lz.massive_momentum(1.0, rng.normal(size=3))
        assert np.allclose(lz.little_group_element(np.eye(4), p, "massive"), np.eye(4), atol=1e-12)

    def test_fixes_reference_momentum(self, rng):
        for _ in range(100):
            lam = random_lorentz(rng)
            m = rng.uniform(0.5, 3.0)
            p = lz.massive_momentum(m, rng.normal(size=3))
            w = lz.little_group_element(lam, p, "massive")
            kr = np.array([m, 0, 0, 0.0])
            assert np.max(np.abs(w @ kr - kr)) < 1e-8 * m
            assert lz.is_rotation(w[1:, 1:], tol=1e-8)

            q = lz.photon_momentum(rng.normal(size=3))
            w = lz.little_group_element(lam, q, "massless")
            assert np.max(np.abs(w @ lz.MASSLESS_REFERENCE - lz.MASSLESS_REFERENCE)) < 1e-8

    def test_pure_rotation_gives_rotation_itself(self, rng):
        for _ in range(50):
            r = random_rotation(rng)
            p = lz.massive_momentum(rng.uniform(0.5, 2.0), rng.normal(size=3))
            w = lz.little_group_element(lz.embed_rotation(r), p, "massive")
            assert np.max(np.abs(w[1:, 1:] - r)) < 1e-8

    def test_z_boost_keeps_rest_momentum(self):
        lam = lz.boost_from_velocity([0, 0, 0.5])
        p = lz.massive_momentum(1.3, [0.2, -0.4, 0.7])
        w = lz.little_group_element(lam, p, "massive")
        kr = np.array([1.3, 0, 0, 0.0])
        assert np.allclose(w @ kr, kr, atol=1e-10)

    def test_cocycle(self, rng):
        for _ in range(50):
            lam1 = random_lorentz(rng)
            lam2 = random_lorentz(rng)
            p = lz.massive_momentum(1.0, rng.normal(size=3))
            w21 = lz.little_group_element(lam2 @ lam1, p, "massive")
            chained = lz.little_group_element(lam2, lam1 @ p, "massive") @ lz.little_group_element(lam1, p, "massive")
            assert np.max(np.abs(w21 - chained)) < 1e-8

    def test_off_shell_rejected(self):
        with pytest.raises(lz.DomainError):
            lz.little_group_element(np.eye(4), np.array([1.0, 0, 0, 0.99]), "massless")


class TestAxisAngle:
    def test_identity_convention(self):
        aa = lz.rotation_axis_angle(np.eye(3))
        assert aa.angle == 0.0
        assert np.allclose(aa.axis, [0, 0, 1])

    def test_z_rotation(self):
        aa = lz.rotation_axis_angle(lz.rotation_z(np.pi / 3))
        assert aa.angle == pytest.approx(np.pi / 3, abs=1e-12)
        assert np.allclose(aa.axis, [0, 0, 1], atol=1e-12)

    def test_trace_identity_and_reconstruction(self, rng):
        for _ in range(200):
            r = random_rotation(rng)
            aa = lz.rotation_axis_angle(r)
            assert 0.0 <= aa.angle <= np.pi
            assert np.cos(aa.angle) == pytest.approx((np.trace(r) - 1) / 2, abs=1e-10)
            assert np.max(np.abs(lz.rotation_about(aa.axis, aa.angle) - r)) < 1e-10

    def test_half_turn_axis_sign(self):
        aa = lz.rotation_axis_angle(lz.rotation_about([0, -1, 0], np.pi))
        assert aa.angle == pytest.approx(np.pi)
        assert aa.axis[1] > 0  # first nonzero component made positive


class TestWignerDHalf:
    def test_zero_angle(self):
        d = lz.wigner_D_half(lz.AxisAngle(np.array([0.0, 0, 1]), 0.0))
        assert np.allclose(d, np.eye(2))

    def test_z_half_turn(self):
        # matrix exponential oracle: expm(-i pi/2 sigma_z)
        scipy_linalg = pytest.importorskip("scipy.linalg")
        d = lz.wigner_D_half(lz.AxisAngle(np.array([0.0, 0, 1]), np.pi))
        oracle = scipy_linalg.expm(-1j * (np.pi / 2) * lz.PAULI_Z)
        assert np.max(np.abs(d - oracle)) < 1e-12
        assert np.allclose(d, np.diag([np.exp(-1j * np.pi / 2), np.exp(1j * np.pi / 2)]))

    def test_matches_expm_oracle(self, rng):
        scipy_linalg = pytest.importorskip("scipy.linalg")
        for _ in range(25):
            axis = random_unit_vector(rng)
            angle = rng.uniform(0, np.pi)
            d = lz.wigner_D_half(lz.AxisAngle(axis, angle))
            oracle = scipy_linalg.expm(-1j * (angle / 2) * np.einsum("k,kij->ij", axis, lz.PAULI))
            assert np.max(np.abs(d - oracle)) < 1e-12

    def test_unitary_unit_determinant(self, rng):
        for _ in range(50):
            d = lz.wigner_D_half(lz.AxisAngle(random_unit_vector(rng), rng.uniform(0, np.pi)))
            assert np.max(np.abs(d @ d.conj().T - np.eye(2))) < 1e-10
            assert abs(np.linalg.det(d) - 1.0) < 1e-10

    def test_projective_homomorphism(self, rng):
        for _ in range(100):
            r1 = random_rotation(rng)
            r2 = random_rotation(rng)
            d12 = lz.wigner_D_from_rotation(r1 @ r2)
            prod = lz.wigner_D_from_rotation(r1) @ lz.wigner_D_from_rotation(r2)
            assert min(np.max(np.abs(d12 - prod)), np.max(np.abs(d12 + prod))) < 1e-10


class TestWignerAxisAngleMassive:
    def test_parallel_momentum_degenerate(self):
        aa = lz.wigner_axis_angle_massive([0, 0, 0.6], [0, 0, 0.4], 1.0)
        assert aa.angle == pytest.approx(0.0, abs=1e-12)
        assert np.allclose(aa.axis, [0, 0, 1])

    def test_leading_order_angle(self):
        # (1 - sqrt(1 - 0.36))/0.6 = 1/3, times p/m = 0.1 at right angle
        aa = lz.wigner_axis_angle_massive([0, 0, 0.6], [0.1, 0, 0], 1.0)
        assert aa.angle == pytest.approx(1.0 / 30.0, rel=0.02)

    def test_axis_parallel_to_cross_product(self, rng):
        # The rotation axis of W(B(v), p) lies along the v x p line; with this
        # little-group convention it points along p x v (the observer-velocity
        # reading of the cross product).
        for _ in range(100):
            v = random_velocity(rng)
            p = rng.normal(size=3)
            if np.linalg.norm(np.cross(v, p)) < 1e-6:
                continue
            aa = lz.wigner_axis_angle_massive(v, p, 1.0)
            cross = np.cross(v, p)
            cross /= np.linalg.norm(cross)
            assert abs(abs(aa.axis @ cross) - 1.0) < 1e-8
            assert aa.axis @ np.cross(p, v) > 0

    def test_matches_little_group_extraction(self, rng):
        for _ in range(20):
            v = random_velocity(rng)
            p = rng.normal(size=3)
            m = rng.uniform(0.5, 2.0)
            aa = lz.wigner_axis_angle_massive(v, p, m)
            w = lz.little_group_element(
                lz.boost_from_velocity(v), lz.massive_momentum(m, p), "massive"
            )
            direct = lz.rotation_axis_angle(w[1:, 1:])
            assert aa.angle == pytest.approx(direct.angle, abs=1e-12)

    def test_leading_order_convergence(self):
        # |omega_exact - omega_leading| = O((p/m)^2) over a momentum grid
        v = [0, 0, 0.6]
        m = 1.0
        for pm in (0.02, 0.05, 0.1, 0.2):
            for theta in (0.3, 0.9, 1.5):
                p = pm * np.array([np.sin(theta), 0.0, np.cos(theta)])
                exact = lz.wigner_axis_angle_massive(v, p, m).angle
                leading = lz.wigner_angle_leading_order(v, p, m)
                assert abs(exact - leading) <= 1.0 * pm**2


class TestPhotonWignerPhase:
    def test_rotation_about_beam_axis(self):
        params = lz.photon_wigner_phase(
            lz.embed_rotation(lz.rotation_z(0.8)), lz.photon_momentum([0, 0, 3.0])
        )
        assert params.xi == pytest.approx(0.8, abs=1e-12)
        assert params.beta == pytest.approx(0.0, abs=1e-12)
        assert params.gamma == pytest.approx(0.0, abs=1e-12)

    def test_z_boost_no_phase(self, rng):
        lam = lz.boost_from_velocity([0, 0, 0.7])
        for _ in range(20):
            p = lz.photon_momentum(rng.normal(size=3))
            params = lz.photon_wigner_phase(lam, p)
            assert abs(params.xi) < 1e-10

    def test_rotation_phase_equals_decomposition_angle(self, rng):
        # xi equals the angle of the rotation about the image direction in
        # R = R_q(omega) R(qhat) R(phat)^-1
        for _ in range(50):
            r = random_rotation(rng)
            p3 = rng.normal(size=3)
            p_hat = p3 / np.linalg.norm(p3)
            q_hat = r @ p_hat
            around = r @ lz.standard_rotation(p_hat) @ lz.standard_rotation(q_hat).T
            aa = lz.rotation_axis_angle(around)
            omega = aa.angle * np.sign(aa.axis @ q_hat)
            params = lz.photon_wigner_phase(lz.embed_rotation(r), lz.photon_momentum(p3))
            assert np.angle(np.exp(1j * (params.xi - omega))) == pytest.approx(0.0, abs=1e-8)

    def test_rotation_additivity(self, rng):
        for _ in range(50):
            r1 = random_rotation(rng)
            r2 = random_rotation(rng)
            p = lz.photon_momentum(rng.normal(size=3))
            xi_total = lz.photon_wigner_phase(lz.embed_rotation(r2 @ r1), p).xi
            xi1 = lz.photon_wigner_phase(lz.embed_rotation(r1), p).xi
            xi2 = lz.photon_wigner_phase(lz.embed_rotation(r2), lz.embed_rotation(r1) @ p).xi
            assert np.angle(np.exp(1j * (xi_total - xi1 - xi2))) == pytest.approx(0.0, abs=1e-8)

    def test_reconstruction_contract(self, rng):
        for _ in range(50):
            lam = random_lorentz(rng)
            p = lz.photon_momentum(rng.normal(size=3))
            params = lz.photon_wigner_phase(lam, p)
            w = lz.little_group_element(lam, p, "massless")
            rebuilt = lz.null_translation(params.beta, params.gamma) @ lz.embed_rotation(
                lz.rotation_z(params.xi)
            )
            assert np.max(np.abs(rebuilt - w)) < 1e-8
