import json

import numpy as np
import pytest

from conftest import random_density_matrix, random_pure_state
from qlorentz import causality as ca


def random_kraus_ensemble(rng, dim, n_outcomes=2, kraus_per_outcome=2):
    """Random complete ensemble from the columns of a Haar-ish isometry."""
    total = n_outcomes * kraus_per_outcome
    z = rng.normal(size=(dim * total, dim)) + 1j * rng.normal(size=(dim * total, dim))
    q, _ = np.linalg.qr(z)  # isometry: q^dag q = 1_dim
    blocks = [q[i * dim : (i + 1) * dim, :] for i in range(total)]
    outcomes = [
        blocks[i * kraus_per_outcome : (i + 1) * kraus_per_outcome] for i in range(n_outcomes)
    ]
    return ca.KrausEnsemble.from_lists(outcomes, dim)


class TestKrausEnsemble:
    def test_completeness_enforced(self):
        with pytest.raises(ValueError):
            ca.KrausEnsemble.from_lists([[np.eye(2) * 0.999]], 2)

    def test_completeness_near_miss_rejected(self):
        # off by 1e-3 in one entry
        k = np.eye(2)
        k[0, 0] = np.sqrt(1 - 1e-3)
        with pytest.raises(ValueError):
            ca.KrausEnsemble.from_lists([[k]], 2)

    def test_povm_elements_psd_and_complete(self, rng):
        ens = random_kraus_ensemble(rng, 3)
        elements = ens.povm_elements()
        assert np.max(np.abs(sum(elements) - np.eye(3))) < 1e-10
        for e in elements:
            assert np.linalg.eigvalsh(e).min() > -1e-12


class TestMeasure:
    def test_basis_pvm_on_plus_state(self):
        plus = np.outer(ca.KET_PLUS, ca.KET_PLUS.conj())
        ens = ca.KrausEnsemble.from_lists(
            [[np.diag([1.0, 0.0])], [np.diag([0.0, 1.0])]], 2
        )
        stats = ca.measure(ens, plus)
        assert np.allclose(stats.probs, [0.5, 0.5])

    def test_probs_sum_to_one(self, rng):
        for _ in range(10):
            ens = random_kraus_ensemble(rng, 4, n_outcomes=3)
            rho = random_density_matrix(rng, 4)
            stats = ca.measure(ens, rho)
            assert stats.probs.sum() == pytest.approx(1.0, abs=1e-12)
            assert np.all(stats.probs > -1e-12)

    def test_average_equals_mixture(self, rng):
        ens = random_kraus_ensemble(rng, 2, n_outcomes=2)
        rho = random_density_matrix(rng, 2)
        stats = ca.measure(ens, rho)
        mix = sum(
            p * post for p, post in zip(stats.probs, stats.post_states) if post is not None
        )
        assert np.max(np.abs(stats.average - mix)) < 1e-12


class TestMarginalIndependence:
    def test_local_pair_has_no_deviation(self, rng):
        for _ in range(20):
            op_a = random_kraus_ensemble(rng, 2)
            op_b = random_kraus_ensemble(rng, 2)
            rho = random_density_matrix(rng, 4)
            report = ca.bob_marginal_independence(op_a, op_b, rho)
            assert report["max_deviation"] <= 1e-12

    def test_identity_alice_channel(self, rng):
        op_a = ca.KrausEnsemble.from_lists([[np.eye(2)]], 2)
        op_b = random_kraus_ensemble(rng, 2)
        rho = random_density_matrix(rng, 4)
        assert ca.bob_marginal_independence(op_a, op_b, rho)["max_deviation"] <= 1e-13

    def test_nonlocal_joint_kraus_deviate(self, rng):
        # deliberately non-commuting joint families: incomplete Bell pieces
        # against a Bob-local unitary family
        bell = ca.incomplete_bell_operation().ensemble
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        bob_flip = ca.embed_b(ca.KrausEnsemble.from_lists([[x]], 2), 2)
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0  # |00>
        after_bob = bob_flip.all_kraus()[0] @ rho @ bob_flip.all_kraus()[0].conj().T
        p_then = ca.measure(bell, after_bob).probs
        p_direct = ca.measure(bell, rho).probs
        assert np.max(np.abs(p_then - p_direct)) > 0.4


class TestCommutingKrausCheck:
    def test_local_families_commute(self, rng):
        op_a = ca.embed_a(random_kraus_ensemble(rng, 2), 2)
        op_b = ca.embed_b(random_kraus_ensemble(rng, 2), 2)
        assert ca.commuting_kraus_check(op_a, op_b)

    def test_scalar_family_commutes_with_anything(self, rng):
        scalars = ca.KrausEnsemble.from_lists(
            [[np.eye(4) / np.sqrt(2)], [np.eye(4) / np.sqrt(2)]], 4
        )
        other = random_kraus_ensemble(rng, 4)
        assert ca.commuting_kraus_check(scalars, other)

    def test_bell_vs_local_unitary_fails(self):
        bell = ca.incomplete_bell_operation().ensemble
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        local = ca.embed_b(ca.KrausEnsemble.from_lists([[x]], 2), 2)
        assert not ca.commuting_kraus_check(bell, local)

    def test_dimension_mismatch(self, rng):
        with pytest.raises(ValueError):
            ca.commuting_kraus_check(random_kraus_ensemble(rng, 2), random_kraus_ensemble(rng, 4))


class TestSemicausal:
    def test_local_channel_both_directions(self, rng):
        theta = 0.7
        k0 = np.array([[1, 0], [0, np.cos(theta)]], dtype=complex)
        k1 = np.array([[0, np.sin(theta)], [0, 0]], dtype=complex)
        op = ca.BipartiteOperation(
            ca.KrausEnsemble.from_lists([[np.kron(k, np.eye(2))] for k in (k0, k1)], 4), (2, 2)
        )
        assert ca.semicausal_check(op, "B_to_A") == (True, None)
        assert ca.semicausal_check(op, "A_to_B") == (True, None)

    def test_complete_bell_is_causal(self):
        vecs = [ca.bell_state(w) for w in ("phi+", "phi-", "psi+", "psi-")]
        op = ca.BipartiteOperation(
            ca.KrausEnsemble.from_lists([[np.outer(v, v.conj())] for v in vecs], 4), (2, 2)
        )
        for direction in ("B_to_A", "A_to_B"):
            verdict, witness = ca.semicausal_check(op, direction)
            assert verdict and witness is None

    def test_incomplete_bell_signals(self):
        op = ca.incomplete_bell_operation()
        verdict, witness = ca.semicausal_check(op, "B_to_A")
        assert not verdict
        # witness reproduces the |00> vs |01> marginal gap
        assert witness.distance == pytest.approx(0.5, abs=1e-12)
        assert witness.success == pytest.approx(0.75, abs=1e-12)

    def test_relabeling_symmetry(self, rng):
        ops = [ca.incomplete_bell_operation()]
        z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        u, _ = np.linalg.qr(z)
        ops.append(ca.BipartiteOperation(ca.KrausEnsemble.from_lists([[u]], 4), (2, 2)))
        for op in ops:
            swapped = ca.swap_factors(op)
            assert (
                ca.semicausal_check(op, "B_to_A")[0]
                == ca.semicausal_check(swapped, "A_to_B")[0]
            )
            assert (
                ca.semicausal_check(op, "A_to_B")[0]
                == ca.semicausal_check(swapped, "B_to_A")[0]
            )

    def test_operational_probe_agrees_with_kernel_test(self, rng):
        # random local operations look semicausal to the sampled probe too
        op_a = random_kraus_ensemble(rng, 2)
        op = ca.BipartiteOperation(ca.embed_a(op_a, 2), (2, 2))
        assert ca.semicausal_defect(op, "B_to_A") <= 1e-10
        witness = ca._witness_search(op, "B_to_A")
        assert witness.distance <= 1e-10


class TestSeparableSuperoperator:
    def test_local_pvm_products(self):
        p0 = np.diag([1.0, 0.0]).astype(complex)
        p1 = np.diag([0.0, 1.0]).astype(complex)
        op = ca.separable_superoperator(
            [(a, b) for a in (p0, p1) for b in (p0, p1)]
        )
        assert ca.semicausal_check(op, "B_to_A")[0]
        assert ca.semicausal_check(op, "A_to_B")[0]

    def test_identity_operation(self):
        op = ca.separable_superoperator([(np.eye(2), np.eye(2))])
        rho = np.outer(ca.bell_state("psi-"), ca.bell_state("psi-").conj())
        assert np.max(np.abs(op.averaged(rho) - rho)) < 1e-14

    def test_incomplete_family_rejected(self):
        with pytest.raises(ValueError):
            ca.separable_superoperator([(np.eye(2) * np.sqrt(0.999), np.eye(2))])


class TestIncompleteBellDemo:
    def test_paper_numbers(self):
        demo = ca.incomplete_bell_demo()
        assert np.allclose(demo["probs_01"], [0.0, 1.0], atol=1e-14)
        assert np.allclose(demo["probs_00"], [0.5, 0.5], atol=1e-14)
        assert np.max(np.abs(demo["alice_marginal_01"] - np.diag([1.0, 0.0]))) < 1e-14
        assert np.max(np.abs(demo["alice_marginal_00"] - np.eye(2) / 2)) < 1e-14
        assert demo["discrimination_success"] == pytest.approx(0.75, abs=1e-13)


class TestOneWayProtocol:
    def test_eigenstates(self):
        elements = ca.one_way_pvm_elements()
        # |1+> is the third projector; |01> the second
        stats = ca.one_way_pvm_protocol(elements[2])
        assert stats.probs[2] == pytest.approx(1.0, abs=1e-12)
        stats = ca.one_way_pvm_protocol(elements[1])
        assert stats.probs[1] == pytest.approx(1.0, abs=1e-12)

    def test_matches_direct_pvm(self, rng):
        elements = ca.one_way_pvm_elements()
        for _ in range(50):
            rho = random_density_matrix(rng, 4)
            stats = ca.one_way_pvm_protocol(rho)
            direct = np.array([np.trace(e @ rho).real for e in elements])
            assert np.max(np.abs(stats.probs - direct)) < 1e-12

    def test_post_states_projective(self, rng):
        elements = ca.one_way_pvm_elements()
        rho = random_density_matrix(rng, 4)
        stats = ca.one_way_pvm_protocol(rho)
        for mu, e in enumerate(elements):
            expected = e @ rho @ e / np.trace(e @ rho).real
            assert np.max(np.abs(stats.post_states[mu] - expected)) < 1e-12


class TestVerificationMeasurement:
    def test_certainty_on_projector_inputs(self):
        for mu, e in enumerate(ca.one_way_pvm_elements()):
            stats = ca.verification_measurement_sim(e)
            assert stats.probs[mu] >= 1.0 - 1e-12

    def test_distribution_normalized(self, rng):
        for _ in range(10):
            rho = random_density_matrix(rng, 4)
            stats = ca.verification_measurement_sim(rho)
            assert stats.probs.sum() == pytest.approx(1.0, abs=1e-12)

    def test_bell_branches_equal_quarter(self, rng):
        for _ in range(5):
            rho = random_density_matrix(rng, 4)
            branch = ca.verification_branch_probabilities(rho)
            for bell in ca.BELL_ORDER:
                total = sum(p for (b, _, _), p in branch.items() if b == bell)
                assert total == pytest.approx(0.25, abs=1e-12)

    def test_frozen_table_regenerates(self):
        assert ca.build_verification_table() == ca.VERIFICATION_TABLE


class TestKrausJson:
    def test_roundtrip(self, rng):
        op = ca.incomplete_bell_operation()
        payload = ca.kraus_to_json(op)
        text = json.dumps(payload)
        back = ca.kraus_from_json(json.loads(text))
        assert back.dims == op.dims
        for fam_a, fam_b in zip(back.ensemble.outcomes, op.ensemble.outcomes):
            for a, b in zip(fam_a, fam_b):
                assert np.max(np.abs(a - b)) < 1e-15

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            ca.kraus_from_json({"dims": [2, 2]})
        with pytest.raises(ValueError):
            ca.kraus_from_json({"dims": [2, 2], "outcomes": [[[[1.0]]]]})
