"""Bipartite measurement operations and causality classification.

A measurement is an outcome-indexed family of Kraus matrices {A_um} with
sum_um A^dag A = 1; outcome u occurs with probability tr(E_u rho),
E_u = sum_m A^dag A, and leaves rho proportional to sum_m A rho A^dag.

For a bipartite operation T with outcome superoperators T_u, signalling is a
property of the outcome-averaged map T'(rho) = sum_u T_u(rho): one party
cannot signal to the other iff the other party's marginal of T'(rho) is
unaffected by any prior local action of the first.  Linearity reduces this to
a finite test: T is semicausal (B to A) iff tr_B T'(X (x) Y) = 0 for every
operator X on A and traceless Y on B.  A randomized operational probe with
sampled local unitaries runs alongside as a cross-check and, when the test
fails, supplies a concrete witness pair of states whose Alice marginals are
distinguishable.

The module also simulates the three worked protocols: the incomplete Bell
measurement (signalling, 0.75 discrimination), the one-way PVM realized with
one classical bit, and the ancilla-assisted verification measurement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import error_probability, trace_distance

COMPLETENESS_TOL = 1e-10
COMMUTATOR_TOL = 1e-10

KET0 = np.array([1.0, 0.0], dtype=complex)
KET1 = np.array([0.0, 1.0], dtype=complex)
KET_PLUS = (KET0 + KET1) / np.sqrt(2.0)
KET_MINUS = (KET0 - KET1) / np.sqrt(2.0)


def bell_state(which: str) -> np.ndarray:
    """Bell vectors: psi+/- = (|01> +/- |10>)/sqrt2, phi+/- = (|00> +/- |11>)/sqrt2."""
    s2 = 1.0 / np.sqrt(2.0)
    table = {
        "psi-": np.array([0.0, s2, -s2, 0.0]),
        "psi+": np.array([0.0, s2, s2, 0.0]),
        "phi-": np.array([s2, 0.0, 0.0, -s2]),
        "phi+": np.array([s2, 0.0, 0.0, s2]),
    }
    return table[which].astype(complex)


@dataclass(frozen=True)
class KrausEnsemble:
    """Outcome-indexed Kraus families on a d-dimensional space."""

    outcomes: tuple[tuple[np.ndarray, ...], ...]
    dim: int

    @classmethod
    def from_lists(cls, outcomes, dim: int | None = None) -> "KrausEnsemble":
        mats = tuple(
            tuple(np.asarray(m, dtype=complex) for m in family) for family in outcomes
        )
        d = dim if dim is not None else mats[0][0].shape[0]
        ens = cls(mats, d)
        defect = ens.completeness_defect()
        if defect > COMPLETENESS_TOL:
            raise ValueError(f"Kraus family incomplete: defect {defect:.3e}")
        return ens

    def completeness_defect(self) -> float:
        acc = np.zeros((self.dim, self.dim), dtype=complex)
        for family in self.outcomes:
            for a in family:
                if a.shape != (self.dim, self.dim):
                    raise ValueError("Kraus matrix has wrong shape")
                acc += a.conj().T @ a
        return float(np.max(np.abs(acc - np.eye(self.dim))))

    def povm_elements(self) -> list[np.ndarray]:
        return [sum(a.conj().T @ a for a in family) for family in self.outcomes]

    def all_kraus(self) -> list[np.ndarray]:
        return [a for family in self.outcomes for a in family]


@dataclass(frozen=True)
class BipartiteOperation:
    """Kraus ensemble on H_A (x) H_B with a declared tensor split."""

    ensemble: KrausEnsemble
    dims: tuple[int, int]

    def __post_init__(self):
        if self.dims[0] * self.dims[1] != self.ensemble.dim:
            raise ValueError("tensor factor dimensions do not match the ensemble")

    def averaged(self, rho: np.ndarray) -> np.ndarray:
        """Outcome-averaged output T'(rho)."""
        out = np.zeros_like(np.asarray(rho, dtype=complex))
        for a in self.ensemble.all_kraus():
            out += a @ rho @ a.conj().T
        return out


@dataclass(frozen=True)
class OutcomeStats:
    probs: np.ndarray
    post_states: tuple
    average: np.ndarray


@dataclass(frozen=True)
class SignallingWitness:
    """Pair of inputs differing by the sender's local unitary whose receiver
    marginals of T' are distinguishable."""

    rho1: np.ndarray
    rho2: np.ndarray
    marginal1: np.ndarray
    marginal2: np.ndarray
    distance: float
    success: float


def measure(ensemble: KrausEnsemble, rho) -> OutcomeStats:
    """Outcome probabilities, normalized post states and the averaged output."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (ensemble.dim, ensemble.dim):
        raise ValueError("state dimension does not match the ensemble")
    probs = []
    posts = []
    avg = np.zeros_like(rho)
    for family in ensemble.outcomes:
        out = np.zeros_like(rho)
        for a in family:
            out += a @ rho @ a.conj().T
        p = float(np.trace(out).real)
        avg += out
        probs.append(p)
        posts.append(out / p if p > 1e-12 else None)
    return OutcomeStats(np.array(probs), tuple(posts), avg)


def partial_trace(rho, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Trace out one factor of a bipartite matrix; keep = 0 keeps A, 1 keeps B."""
    da, db = dims
    r = np.asarray(rho, dtype=complex).reshape(da, db, da, db)
    return np.trace(r, axis1=1, axis2=3) if keep == 0 else np.trace(r, axis1=0, axis2=2)


def embed_a(ensemble: KrausEnsemble, db: int) -> KrausEnsemble:
    eye = np.eye(db)
    return KrausEnsemble(
        tuple(tuple(np.kron(a, eye) for a in fam) for fam in ensemble.outcomes),
        ensemble.dim * db,
    )


def embed_b(ensemble: KrausEnsemble, da: int) -> KrausEnsemble:
    eye = np.eye(da)
    return KrausEnsemble(
        tuple(tuple(np.kron(eye, b) for b in fam) for fam in ensemble.outcomes),
        ensemble.dim * da,
    )


def bob_marginal_independence(opA: KrausEnsemble, opB: KrausEnsemble, rho) -> dict:
    """Compare Bob's outcome distribution computed jointly (Alice's operation
    applied first, outcomes summed over) against the distribution from Bob's
    ensemble alone.  For local factors the two agree identically."""
    da, db = opA.dim, opB.dim
    rho = np.asarray(rho, dtype=complex)
    joint_a = embed_a(opA, db)
    joint_b = embed_b(opB, da)

    after_alice = np.zeros_like(rho)
    for a in joint_a.all_kraus():
        after_alice += a @ rho @ a.conj().T
    p_joint = measure(joint_b, after_alice).probs
    p_alone = measure(opB, partial_trace(rho, (da, db), keep=1)).probs
    return {
        "bob_joint": p_joint,
        "bob_alone": p_alone,
        "max_deviation": float(np.max(np.abs(p_joint - p_alone))),
    }


def _spectral_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m, ord=2))


def commuting_kraus_check(opA: KrausEnsemble, opB: KrausEnsemble) -> bool:
    """True iff every pair of Kraus matrices from the two joint-space families
    commutes (spectral norm of the commutator below 1e-10)."""
    if opA.dim != opB.dim:
        raise ValueError("ensembles act on different joint dimensions")
    for a in opA.all_kraus():
        for b in opB.all_kraus():
            if _spectral_norm(a @ b - b @ a) > COMMUTATOR_TOL:
                return False
    return True


def _traceless_basis(d: int) -> list[np.ndarray]:
    basis = []
    for k in range(d):
        for l in range(d):
            if k != l:
                e = np.zeros((d, d), dtype=complex)
                e[k, l] = 1.0
                basis.append(e)
    for k in range(d - 1):
        e = np.zeros((d, d), dtype=complex)
        e[k, k] = 1.0
        e[k + 1, k + 1] = -1.0
        basis.append(e)
    return basis


def _unit_basis(d: int) -> list[np.ndarray]:
    out = []
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = 1.0
            out.append(e)
    return out


def semicausal_defect(op: BipartiteOperation, direction: str) -> float:
    """Largest entry of the receiver's marginal of T'(X (x) Y) over a complete
    operator basis X of the receiver side and traceless basis Y of the sender
    side.  Zero iff the sender cannot signal through the averaged operation."""
    da, db = op.dims
    if direction == "B_to_A":
        xs, ys, keep = _unit_basis(da), _traceless_basis(db), 0
        pair = lambda x, y: np.kron(x, y)
    elif direction == "A_to_B":
        xs, ys, keep = _unit_basis(db), _traceless_basis(da), 1
        pair = lambda x, y: np.kron(y, x)
    else:
        raise ValueError("direction must be 'B_to_A' or 'A_to_B'")
    worst = 0.0
    kraus = op.ensemble.all_kraus()
    for x in xs:
        for y in ys:
            z = pair(x, y)
            out = np.zeros_like(z)
            for k in kraus:
                out += k @ z @ k.conj().T
            worst = max(worst, float(np.max(np.abs(partial_trace(out, (da, db), keep)))))
    return worst


def _witness_search(op: BipartiteOperation, direction: str, seed: int = 7) -> SignallingWitness:
    """Operational search for a signalling witness: sender-local unitaries on
    candidate inputs, maximizing the receiver's marginal trace distance of T'."""
    da, db = op.dims
    keep = 0 if direction == "B_to_A" else 1
    sender_dim = db if direction == "B_to_A" else da
    rng = np.random.default_rng(seed)

    paulis = [
        np.eye(2, dtype=complex),
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
        np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0),
    ]

    def sender_unitaries():
        if sender_dim == 2:
            yield from paulis[1:]
        for _ in range(12):
            z = rng.normal(size=(sender_dim, sender_dim)) + 1j * rng.normal(size=(sender_dim, sender_dim))
            q, _ = np.linalg.qr(z)
            yield q

    def candidates():
        for i in range(da * db):
            rho = np.zeros((da * db, da * db), dtype=complex)
            rho[i, i] = 1.0
            yield rho
        for _ in range(8):
            v = rng.normal(size=da * db) + 1j * rng.normal(size=da * db)
            v /= np.linalg.norm(v)
            yield np.outer(v, v.conj())

    best = None
    for rho1 in candidates():
        for u in sender_unitaries():
            big_u = np.kron(np.eye(da), u) if direction == "B_to_A" else np.kron(u, np.eye(db))
            rho2 = big_u @ rho1 @ big_u.conj().T
            m1 = partial_trace(op.averaged(rho1), (da, db), keep)
            m2 = partial_trace(op.averaged(rho2), (da, db), keep)
            dist = trace_distance(m1, m2)
            if best is None or dist > best.distance + 1e-15:
                best = SignallingWitness(
                    rho1, rho2, m1, m2, dist, 1.0 - error_probability(m1, m2)
                )
    return best


def semicausal_check(op: BipartiteOperation, direction: str):
    """Decide semicausality of the averaged operation in the given direction.

    Returns (verdict, witness): witness is None when semicausal, otherwise a
    concrete pair of sender-related inputs with distinguishable receiver
    marginals."""
    defect = semicausal_defect(op, direction)
    if defect <= 1e-9:
        return True, None
    return False, _witness_search(op, direction)


def swap_factors(op: BipartiteOperation) -> BipartiteOperation:
    """Relabel the two parties: K -> S K S^T with S the factor-swap permutation."""
    da, db = op.dims
    s = np.zeros((da * db, da * db))
    for i in range(da):
        for j in range(db):
            s[j * da + i, i * db + j] = 1.0
    swapped = tuple(
        tuple(s @ a @ s.T for a in fam) for fam in op.ensemble.outcomes
    )
    return BipartiteOperation(KrausEnsemble(swapped, da * db), (db, da))


def separable_superoperator(ops) -> BipartiteOperation:
    """Build T(rho) = sum_k (A_k (x) B_k) rho (A_k (x) B_k)^dag, one outcome
    per k; rejects families violating completeness."""
    pairs = [(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)) for a, b in ops]
    da = pairs[0][0].shape[0]
    db = pairs[0][1].shape[0]
    ensemble = KrausEnsemble.from_lists([[np.kron(a, b)] for a, b in pairs], da * db)
    return BipartiteOperation(ensemble, (da, db))


# -- worked protocols -------------------------------------------------------


def incomplete_bell_operation() -> BipartiteOperation:
    """Two-outcome PVM {|phi+><phi+|, 1 - |phi+><phi+|} on two qubits."""
    e1 = np.outer(bell_state("phi+"), bell_state("phi+").conj())
    e2 = np.eye(4) - e1
    return BipartiteOperation(KrausEnsemble.from_lists([[e1], [e2]], 4), (2, 2))


def incomplete_bell_demo() -> dict:
    """Replay of the signalling argument: inputs |01> and |00> lead to Alice
    marginals |0><0| and 1/2 respectively, distinguishable with success 0.75."""
    op = incomplete_bell_operation()
    ens = op.ensemble

    rho01 = np.zeros((4, 4), dtype=complex)
    rho01[1, 1] = 1.0
    rho00 = np.zeros((4, 4), dtype=complex)
    rho00[0, 0] = 1.0

    stats01 = measure(ens, rho01)
    stats00 = measure(ens, rho00)
    marg01 = partial_trace(stats01.average, (2, 2), keep=0)
    marg00 = partial_trace(stats00.average, (2, 2), keep=0)
    pe = error_probability(marg01, marg00)
    return {
        "probs_01": stats01.probs,
        "probs_00": stats00.probs,
        "alice_marginal_01": marg01,
        "alice_marginal_00": marg00,
        "discrimination_success": 1.0 - pe,
    }


def one_way_pvm_elements() -> list[np.ndarray]:
    """Projectors |00>, |01>, |1+>, |1-> of the one-way measurement."""
    vecs = [
        np.kron(KET0, KET0),
        np.kron(KET0, KET1),
        np.kron(KET1, KET_PLUS),
        np.kron(KET1, KET_MINUS),
    ]
    return [np.outer(v, v.conj()) for v in vecs]


def one_way_pvm_protocol(rho) -> OutcomeStats:
    """Simulate the one-bit protocol: Alice measures z and announces; Bob
    measures z after '0' and x after '1'.  The joint outcome statistics equal
    the direct four-projector PVM, with projective post states."""
    rho = np.asarray(rho, dtype=complex)
    pa = [np.kron(np.outer(k, k.conj()), np.eye(2)) for k in (KET0, KET1)]
    bob_bases = {
        0: (KET0, KET1),
        1: (KET_PLUS, KET_MINUS),
    }
    probs = np.zeros(4)
    posts = [None] * 4
    avg = np.zeros_like(rho)
    for a_out in (0, 1):
        conditioned = pa[a_out] @ rho @ pa[a_out]
        for b_idx, b_vec in enumerate(bob_bases[a_out]):
            pb = np.kron(np.eye(2), np.outer(b_vec, b_vec.conj()))
            out = pb @ conditioned @ pb
            mu = 2 * a_out + b_idx
            p = float(np.trace(out).real)
            probs[mu] = p
            posts[mu] = out / p if p > 1e-12 else None
            avg += out
    return OutcomeStats(probs, tuple(posts), avg)


# -- verification measurement ----------------------------------------------

BELL_ORDER = ("psi-", "psi+", "phi-", "phi+")

# (bell outcome, Alice z outcome, ancilla outcome) -> PVM outcome index.
# Regenerated by build_verification_table(); kept inline as frozen data.
VERIFICATION_TABLE = {
    ("psi-", 0, 0): 0, ("psi-", 0, 1): 1, ("psi-", 1, 0): 2, ("psi-", 1, 1): 3,
    ("psi+", 0, 0): 0, ("psi+", 0, 1): 1, ("psi+", 1, 0): 3, ("psi+", 1, 1): 2,
    ("phi-", 0, 0): 1, ("phi-", 0, 1): 0, ("phi-", 1, 0): 2, ("phi-", 1, 1): 3,
    ("phi+", 0, 0): 1, ("phi+", 0, 1): 0, ("phi+", 1, 0): 3, ("phi+", 1, 1): 2,
}


def _verification_branch_operators():
    """Commuting projector chains of the verification protocol on the register
    (A_in, B_in, B_anc, A_anc)."""
    eye2 = np.eye(2, dtype=complex)
    branches = []
    for bell in BELL_ORDER:
        v = bell_state(bell)
        bell_proj = np.outer(v, v.conj())
        proj_bell = np.kron(np.kron(eye2, bell_proj), eye2)
        for a_out, a_vec in enumerate((KET0, KET1)):
            proj_a = np.kron(
                np.kron(np.outer(a_vec, a_vec.conj()), np.eye(4, dtype=complex)), eye2
            )
            anc_basis = (KET0, KET1) if a_out == 0 else (KET_PLUS, KET_MINUS)
            for c_out, c_vec in enumerate(anc_basis):
                proj_c = np.kron(np.eye(8, dtype=complex), np.outer(c_vec, c_vec.conj()))
                branches.append(((bell, a_out, c_out), proj_c @ proj_a @ proj_bell))
    return branches


def verification_branch_probabilities(rho) -> dict:
    """Probability of every (bell, alice z, ancilla) branch for a two-qubit
    input state; the shared |psi-> ancilla pair is appended internally."""
    rho = np.asarray(rho, dtype=complex)
    anc = bell_state("psi-")
    full = np.kron(rho, np.outer(anc, anc.conj()))
    # reorder (A_in, B_in, anc_B, anc_A): the ancilla pair is created as
    # (B_anc, A_anc), matching the teleportation roles directly.
    out = {}
    for key, k in _verification_branch_operators():
        out[key] = float(np.trace(k @ full @ k.conj().T).real)
    return out


def build_verification_table() -> dict:
    """Brute-force regeneration of VERIFICATION_TABLE from the four projector
    inputs; raises if any branch would be ambiguous."""
    table = {}
    for mu, e in enumerate(one_way_pvm_elements()):
        for key, p in verification_branch_probabilities(e).items():
            if p > 1e-9:
                if key in table and table[key] != mu:
                    raise RuntimeError("ambiguous verification branch")
                table[key] = mu
    return table


def verification_measurement_sim(rho) -> OutcomeStats:
    """Ancilla-assisted verification of the one-way PVM: Bob Bell-measures his
    qubit with his ancilla half, Alice measures z on her qubit and then z or x
    on her ancilla half; the decision table maps the three classical outcomes
    to a PVM outcome.  On rho = E_mu the outcome mu occurs with certainty."""
    rho = np.asarray(rho, dtype=complex)
    anc = bell_state("psi-")
    full = np.kron(rho, np.outer(anc, anc.conj()))
    probs = np.zeros(4)
    posts = [np.zeros((16, 16), dtype=complex) for _ in range(4)]
    for key, k in _verification_branch_operators():
        mu = VERIFICATION_TABLE[key]
        out = k @ full @ k.conj().T
        probs[mu] += float(np.trace(out).real)
        posts[mu] += out
    final = tuple(
        posts[mu] / probs[mu] if probs[mu] > 1e-12 else None for mu in range(4)
    )
    avg = sum(p for p in posts)
    return OutcomeStats(probs, final, avg)


# -- JSON interchange for Kraus files ---------------------------------------


def kraus_from_json(payload: dict) -> BipartiteOperation:
    """Parse {"dims": [dA, dB], "outcomes": [[matrix, ...], ...]} with matrices
    given as nested rows of [re, im] pairs."""
    try:
        da, db = (int(d) for d in payload["dims"])
        outcomes = payload["outcomes"]
        families = []
        for family in outcomes:
            mats = []
            for matrix in family:
                rows = [[complex(re, im) for re, im in row] for row in matrix]
                mats.append(np.array(rows, dtype=complex))
            families.append(mats)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed Kraus file: {exc}") from exc
    ensemble = KrausEnsemble.from_lists(families, da * db)
    return BipartiteOperation(ensemble, (da, db))


def kraus_to_json(op: BipartiteOperation) -> dict:
    return {
        "dims": list(op.dims),
        "outcomes": [
            [
                [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(a)]
                for a in family
            ]
            for family in op.ensemble.outcomes
        ],
    }
