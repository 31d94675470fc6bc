"""Swap-test measurement protocol: exact statistics, back-action, sampling.

The architecture holds three stacked registers: two copies t and s of the
state under test and a control register c of ancillas prepared in |+>.  A
controlled-SWAP on each column (c_j, t_j, s_j) followed by a sigma_x
measurement of c_j realizes a swap test of the reduced state rho_j, with

    p(+) = (1 + Tr[rho_j^2]) / 2,   p(-) = (1 - Tr[rho_j^2]) / 2.

The counted symbol "1" is the -1 eigenstate of sigma_x, so the mean number
of 1s per shot equals n*Q/4 exactly.  (Some write-ups attach the count to
p(+); with the p(+-) convention above only the minus outcome reproduces the
n*Q/4 identity, so that labeling is used throughout.)

Sampling is seed-deterministic: a run draws all trial outcomes from a single
PCG64 stream (``numpy.random.default_rng(seed)``) as one block in trial
order, so identical seeds give bit-identical outcome streams regardless of
how the consumer schedules the work.  Every trial consumes fresh copies of
the state; register reuse (and the depolarize-and-reset it would need) is
not modeled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pulses import canonical_cswap
from .states import (
    DensityMatrix,
    PureState,
    apply_unitary,
    check_subset,
    purity,
    reduced_density,
)

MODE_EXACT_MARGINAL = "exact-marginal"
MODE_FULL_JOINT = "full-joint"
MODES = (MODE_EXACT_MARGINAL, MODE_FULL_JOINT)

# dense-vector feasibility bound for simulating all three registers at once
FULL_JOINT_MAX_QUBITS = 14

# conditioning on outcomes rarer than this is treated as impossible
MIN_OUTCOME_PROBABILITY = 1e-12

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


@dataclass(frozen=True)
class SwapTestResult:
    """Ancilla sigma_x outcome probabilities for one swap test."""

    p_plus: float
    p_minus: float


@dataclass(frozen=True)
class ProtocolRun:
    """Configuration of a sampled measurement run."""

    state: PureState
    n_trials: int
    seed: int
    mode: str = MODE_EXACT_MARGINAL

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be >= 1, got {self.n_trials}")
        if self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed}")
        if self.mode == MODE_FULL_JOINT and 3 * self.state.n_qubits > FULL_JOINT_MAX_QUBITS:
            raise ValueError(
                f"full-joint mode needs 3*n_qubits <= {FULL_JOINT_MAX_QUBITS}, "
                f"got n_qubits = {self.state.n_qubits}"
            )


@dataclass(frozen=True)
class EstimatorStats:
    """Sample mean, standard error, and trial count of an estimate."""

    estimate: float
    std_error: float
    n_trials: int


# ---------------------------------------------------------------------------
# exact statistics


def swap_test_exact(rho: DensityMatrix) -> SwapTestResult:
    """Ancilla outcome probabilities for two copies of ``rho``."""
    p_plus = (1.0 + purity(rho)) / 2.0
    return SwapTestResult(p_plus, 1.0 - p_plus)


def swap_test_post_state(rho: DensityMatrix, outcome: str) -> DensityMatrix:
    """State of the two copies after a selective swap test.

    The test measures the SWAP operator on rho (x) rho; conditioning on the
    +-1 outcome projects onto the (anti)symmetric subspace:

        rho' = P (rho (x) rho) P / p,   P = (1 +- SWAP)/2.

    Conditioning on an outcome of probability <= 1e-12 (e.g. the minus
    outcome on a pure input) is rejected.
    """
    sign = _outcome_sign(outcome)
    d = rho.dim
    doubled = np.kron(rho.entries, rho.entries)
    projector = (np.eye(d * d) + sign * _swap_operator(d)) / 2.0
    conditioned = projector @ doubled @ projector
    p = float(np.trace(conditioned).real)
    if p <= MIN_OUTCOME_PROBABILITY:
        raise ValueError(f"outcome {outcome!r} has probability {p:.3e}; cannot condition")
    return DensityMatrix(d * d, conditioned / p)


def copy_marginal(doubled: DensityMatrix, copy: str = "a") -> DensityMatrix:
    """Reduced state of one copy of a two-copy (dim d*d) state."""
    d = int(round(np.sqrt(doubled.dim)))
    if d * d != doubled.dim:
        raise ValueError(f"dim {doubled.dim} is not a perfect square")
    r = doubled.entries.reshape(d, d, d, d)
    if copy == "a":
        return DensityMatrix(d, np.einsum("ijkj->ik", r))
    if copy == "b":
        return DensityMatrix(d, np.einsum("ijil->jl", r))
    raise ValueError(f"copy must be 'a' or 'b', got {copy!r}")


def minus_probabilities(state: PureState) -> np.ndarray:
    """Exact per-qubit p(-) = (1 - Tr[rho_k^2])/2."""
    return np.array(
        [(1.0 - purity(reduced_density(state, [k]))) / 2.0 for k in range(state.n_qubits)]
    )


def q_protocol_exact(state: PureState) -> float:
    """Q from the counting identity: (4/n) * sum_k p(-)_k."""
    if state.n_qubits < 2:
        raise ValueError("protocol Q is defined for n >= 2 qubits")
    return float(4.0 / state.n_qubits * np.sum(minus_probabilities(state)))


# ---------------------------------------------------------------------------
# sampling


def sample_outcomes(run: ProtocolRun) -> np.ndarray:
    """Boolean array (n_trials, n_qubits): True where ancilla j read "1".

    exact-marginal mode draws each ancilla independently from its exact
    p(-); full-joint mode simulates all three registers through the bitwise
    c-SWAP circuit and samples the joint ancilla distribution, preserving
    inter-qubit outcome correlations.
    """
    n = run.state.n_qubits
    rng = np.random.default_rng(run.seed)
    if run.mode == MODE_EXACT_MARGINAL:
        p_minus = minus_probabilities(run.state)
        return rng.random((run.n_trials, n)) < p_minus[np.newaxis, :]
    probs = joint_outcome_distribution(run.state)
    draws = rng.choice(probs.size, size=run.n_trials, p=probs)
    shifts = np.arange(n - 1, -1, -1)
    return ((draws[:, np.newaxis] >> shifts[np.newaxis, :]) & 1).astype(bool)


def joint_outcome_distribution(state: PureState) -> np.ndarray:
    """Exact joint distribution of the n ancilla bits (index bit j = ancilla j).

    Simulates the full 3n-qubit protocol: ancillas in |+>^n, two copies of
    the state, a c-SWAP per column, then a Hadamard on each ancilla so the
    computational bit 1 marks the sigma_x minus outcome.
    """
    n = state.n_qubits
    if 3 * n > FULL_JOINT_MAX_QUBITS:
        raise ValueError(
            f"full-joint simulation needs 3*n_qubits <= {FULL_JOINT_MAX_QUBITS}, got {3 * n}"
        )
    plus = np.full(2**n, 2 ** (-n / 2), dtype=complex)
    amps = np.kron(plus, np.kron(state.amplitudes, state.amplitudes))
    joint = PureState(3 * n, amps)
    for j in range(n):
        joint = apply_unitary(joint, canonical_cswap(0, 1, 2, 3), [j, n + j, 2 * n + j])
    for j in range(n):
        joint = apply_unitary(joint, _HADAMARD, [j])
    weights = np.abs(joint.tensor()) ** 2
    probs = weights.sum(axis=tuple(range(n, 3 * n))).reshape(-1)
    return probs / probs.sum()


def q_protocol_sampled(run: ProtocolRun) -> EstimatorStats:
    """Monte Carlo estimate of Q from per-trial counts of "1" ancillas."""
    if run.state.n_qubits < 2:
        raise ValueError("protocol Q is defined for n >= 2 qubits")
    per_trial = 4.0 / run.state.n_qubits * sample_outcomes(run).sum(axis=1)
    estimate = float(per_trial.mean())
    if run.n_trials > 1:
        std_error = float(per_trial.std(ddof=1) / np.sqrt(run.n_trials))
    else:
        std_error = 0.0
    return EstimatorStats(estimate, std_error, run.n_trials)


def convergence_sweep(
    state: PureState, trial_counts: list[int], seed: int
) -> list[tuple[int, float]]:
    """Absolute estimator error |estimate - Q| for each trial count.

    Each count runs with an independent substream derived from
    ``SeedSequence((seed, index))`` so the sweep is reproducible while
    counts stay uncorrelated.
    """
    if any(b <= a for a, b in zip(trial_counts, trial_counts[1:])):
        raise ValueError(f"trial counts must be ascending, got {trial_counts}")
    q_exact = q_protocol_exact(state)
    rows = []
    for i, count in enumerate(trial_counts):
        sub = int(np.random.SeedSequence((seed, i)).generate_state(1, np.uint64)[0])
        stats = q_protocol_sampled(ProtocolRun(state, count, sub))
        rows.append((count, abs(stats.estimate - q_exact)))
    return rows


# ---------------------------------------------------------------------------
# subset purity via an entangled control register


def subset_purity_direct(state: PureState, subset) -> float:
    """Tr[rho_subset^2] by partial trace."""
    subset = check_subset(subset, state.n_qubits)
    return purity(reduced_density(state, subset))


def subset_purity_circuit(state: PureState, subset) -> float:
    """Tr[rho_subset^2] from the full entangled-control circuit.

    A register of m = |subset| control qubits is steered into a GHZ state by
    a CNOT ladder from (|0> + |1>)/sqrt(2) (x) |0...0>, one c-SWAP acts per
    subset column, the ladder is undone, and control qubit 0 is read in the
    sigma_x basis; then Tr[rho_subset^2] = 2 p(+) - 1.
    """
    subset = check_subset(subset, state.n_qubits)
    m, n = len(subset), state.n_qubits
    total = m + 2 * n
    if total > FULL_JOINT_MAX_QUBITS:
        raise ValueError(
            f"circuit simulation needs |subset| + 2*n_qubits <= {FULL_JOINT_MAX_QUBITS}, "
            f"got {total}"
        )
    control = np.zeros(2**m, dtype=complex)
    control[0] = control[2 ** (m - 1)] = 1 / np.sqrt(2)
    amps = np.kron(control, np.kron(state.amplitudes, state.amplitudes))
    joint = PureState(total, amps)
    for k in range(1, m):
        joint = apply_unitary(joint, _CNOT, [k - 1, k])
    for j, qubit in enumerate(subset):
        joint = apply_unitary(
            joint, canonical_cswap(0, 1, 2, 3), [j, m + qubit, m + n + qubit]
        )
    for k in range(m - 1, 0, -1):
        joint = apply_unitary(joint, _CNOT, [k - 1, k])
    t = joint.tensor()
    plus_component = (t[0] + t[1]) / np.sqrt(2)
    p_plus = float(np.sum(np.abs(plus_component) ** 2))
    return 2.0 * p_plus - 1.0


def subset_purity_exact(state: PureState, subset, atol: float = 1e-9) -> float:
    """Subset purity by partial trace, cross-checked against the circuit.

    The circuit route runs whenever it fits the dense-vector bound; a
    disagreement beyond ``atol`` is an internal inconsistency and raises.
    """
    subset = check_subset(subset, state.n_qubits)
    direct = subset_purity_direct(state, subset)
    if len(subset) + 2 * state.n_qubits <= FULL_JOINT_MAX_QUBITS:
        circuit = subset_purity_circuit(state, subset)
        if abs(circuit - direct) > atol:
            raise RuntimeError(
                f"purity routes disagree: direct {direct!r} vs circuit {circuit!r}"
            )
    return direct


# ---------------------------------------------------------------------------
# result export


def run_report(run: ProtocolRun, state_ref: str | None = None) -> dict:
    """JSON-ready summary of a sampled run."""
    outcomes = sample_outcomes(run)
    n = run.state.n_qubits
    per_trial = 4.0 / n * outcomes.sum(axis=1)
    estimate = float(per_trial.mean())
    std_error = (
        float(per_trial.std(ddof=1) / np.sqrt(run.n_trials)) if run.n_trials > 1 else 0.0
    )
    return {
        "state": state_ref if state_ref is not None else f"<{n}-qubit state>",
        "mode": run.mode,
        "seed": run.seed,
        "n_trials": run.n_trials,
        "p_minus_per_qubit": [float(f) for f in outcomes.mean(axis=0)],
        "q_estimate": estimate,
        "std_error": std_error,
    }


def sweep_csv(rows: list[tuple[int, float]]) -> str:
    """Convergence sweep as CSV text (columns: n_trials, abs_error)."""
    lines = ["n_trials,abs_error"]
    lines += [f"{count},{err:.17g}" for count, err in rows]
    return "\n".join(lines) + "\n"


def _swap_operator(d: int) -> np.ndarray:
    idx = np.arange(d * d)
    s = np.zeros((d * d, d * d))
    s[(idx % d) * d + idx // d, idx] = 1.0
    return s


def _outcome_sign(outcome: str) -> int:
    if outcome == "plus":
        return 1
    if outcome == "minus":
        return -1
    raise ValueError(f"outcome must be 'plus' or 'minus', got {outcome!r}")
