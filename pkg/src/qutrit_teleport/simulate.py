"""Seeded Monte-Carlo simulation of the three-party teleportation protocol.

One trial walks the protocol end to end: the sender prepares the input
qutrit in her lab (A1), the post office (A2) shares an entangled pair with
the receiver (B), the joint measurement at A1+A2 selects one of nine
outcomes by the Born rule, the outcome index travels over a classical
channel, and the receiver applies the recovery map when one exists.  The
event log records exactly that order, so recovery can never precede the
classical message.

RNG contract (part of the interface, not an implementation detail): all
randomness comes from NumPy's PCG64 bit generator.  A batch spawns one
child of ``SeedSequence(master_seed)`` per trial; each child supplies two
64-bit words, the first seeding the input-state draw (haar mode), the
second seeding the trial itself.  Replaying a stored trial seed replays
the trial bit for bit.

Haar-random inputs are drawn by normalizing a 6-component standard
Gaussian read as three complex amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.stats import chi2

from . import analysis, engine, published

EVENT_SEQUENCE = ("prepare", "entangle", "joint_measure", "classical_send", "recover")

_CHI2_QUANTILE = 0.999


@dataclass(frozen=True)
class TrialRecord:
    channel: int
    input_state: tuple
    outcome: int
    outcome_probability: float
    classical_message: int
    recovery_applied: bool
    fidelity: Optional[float]
    seed: int
    event_log: tuple

    def replay_key(self) -> tuple:
        return (self.channel, self.input_state, self.seed)


@dataclass(frozen=True)
class BatchSummary:
    channel: int
    trials: int
    empirical_outcome_frequencies: tuple
    mean_fidelity_invertible: Optional[float]
    singular_outcome_rate: float
    chi_square_vs_born: float
    chi_square_dof: int
    chi_square_threshold: float
    chi_square_flagged: bool


@lru_cache(maxsize=None)
def _effect_stack(channel: int, use_paper_gates: bool) -> np.ndarray:
    if not use_paper_gates:
        return analysis.oracle_effect_stack(channel)
    gates = np.stack(
        [
            analysis.gate_matrix(published.paper_gate(channel, k).value)
            for k in range(9)
        ]
    )
    return np.einsum("kji,kjl->kil", gates, gates)


@lru_cache(maxsize=None)
def _numeric_gate_and_recovery(channel: int, outcome: int, use_paper_gates: bool):
    gate = (
        published.paper_gate(channel, outcome).value
        if use_paper_gates
        else engine.derive_gate(channel, outcome)
    )
    rec = analysis.recovery(gate)
    return (
        analysis.gate_matrix(gate),
        None if rec is None else analysis.gate_matrix(rec),
    )


def _born_weights(channel: int, phi: np.ndarray, use_paper_gates: bool) -> np.ndarray:
    p = np.einsum(
        "i,kij,j->k", phi.conj(), _effect_stack(channel, use_paper_gates), phi
    ).real
    return np.clip(p, 0.0, None)


def run_trial(
    channel: int,
    input_state: Sequence[complex],
    seed: int,
    use_paper_gates: bool = False,
) -> TrialRecord:
    """One protocol round.  Deterministic in (channel, input_state, seed)."""
    if not 0 <= channel <= 8:
        raise ValueError(f"channel index {channel} out of range 0..8")
    phi = analysis.as_state(input_state)

    weights = _born_weights(channel, phi, use_paper_gates)
    total = float(weights.sum())
    # Oracle gates satisfy the completeness relation, so total is 1 up to
    # rounding; printed gates may violate it, hence the explicit division.
    probs = weights / total

    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random()
    outcome = int(np.searchsorted(np.cumsum(probs), u, side="right"))
    # rounding in the cumulative sum must never select a zero-mass bin
    outcome = min(outcome, 8)
    while outcome > 0 and probs[outcome] == 0.0:
        outcome -= 1

    gate_num, rec_num = _numeric_gate_and_recovery(channel, outcome, use_paper_gates)
    if rec_num is None:
        fidelity = None
        recovery_applied = False
    else:
        post = gate_num @ phi
        post = post / np.linalg.norm(post)
        restored = rec_num @ post
        restored = restored / np.linalg.norm(restored)
        fidelity = float(abs(np.vdot(phi, restored)) ** 2)
        recovery_applied = True

    event_log = (
        ("prepare", "A1"),
        ("entangle", "A2+B"),
        ("joint_measure", "A1+A2"),
        ("classical_send", "A1+A2->B"),
        ("recover", "B"),
    )
    return TrialRecord(
        channel=channel,
        input_state=tuple(complex(x) for x in phi),
        outcome=outcome,
        outcome_probability=float(weights[outcome]),
        classical_message=outcome,
        recovery_applied=recovery_applied,
        fidelity=fidelity,
        seed=int(seed),
        event_log=event_log,
    )


def haar_state(rng: np.random.Generator) -> np.ndarray:
    """Uniform random pure qutrit state (normalized complex Gaussian)."""
    raw = rng.standard_normal(6)
    v = raw[0::2] + 1j * raw[1::2]
    return v / np.linalg.norm(v)


def trial_seeds(master_seed: int, n: int) -> list:
    """Per-trial (state_seed, trial_seed) pairs via SeedSequence spawning."""
    root = np.random.SeedSequence(master_seed)
    pairs = []
    for child in root.spawn(n):
        state_seed, trial_seed = (int(w) for w in child.generate_state(2, np.uint64))
        pairs.append((state_seed, trial_seed))
    return pairs


def run_batch_records(
    channel: int,
    trials: int,
    master_seed: int,
    input_state: Optional[Sequence[complex]] = None,
    haar: bool = False,
    use_paper_gates: bool = False,
) -> Tuple[BatchSummary, tuple]:
    """Seeded batch; returns the summary and every trial record.

    Exactly one of `input_state` and `haar` selects the input mode.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if haar == (input_state is not None):
        raise ValueError("choose exactly one of a fixed input state or haar mode")

    fixed_phi = None if haar else analysis.as_state(input_state)
    records = []
    for state_seed, trial_seed in trial_seeds(master_seed, trials):
        if haar:
            phi = haar_state(np.random.Generator(np.random.PCG64(state_seed)))
        else:
            phi = fixed_phi
        records.append(run_trial(channel, phi, trial_seed, use_paper_gates))

    summary = summarize(channel, records, fixed_phi=fixed_phi, haar=haar,
                        use_paper_gates=use_paper_gates)
    return summary, tuple(records)


def run_batch(
    channel: int,
    trials: int,
    master_seed: int,
    input_state: Optional[Sequence[complex]] = None,
    haar: bool = False,
    use_paper_gates: bool = False,
) -> BatchSummary:
    summary, _ = run_batch_records(
        channel, trials, master_seed, input_state, haar, use_paper_gates
    )
    return summary


def _expected_distribution(
    channel: int, fixed_phi: Optional[np.ndarray], haar: bool, use_paper_gates: bool
) -> np.ndarray:
    if haar:
        # Averaging the Born rule over the uniform state distribution
        # replaces |phi><phi| with I/3.
        effects = _effect_stack(channel, use_paper_gates)
        p = np.einsum("kii->k", effects).real / 3.0
    else:
        p = _born_weights(channel, fixed_phi, use_paper_gates)
    return p / p.sum()


def summarize(
    channel: int,
    records: Sequence[TrialRecord],
    fixed_phi: Optional[np.ndarray] = None,
    haar: bool = False,
    use_paper_gates: bool = False,
) -> BatchSummary:
    n = len(records)
    counts = np.zeros(9, dtype=np.int64)
    inv_fidelities = []
    singular = 0
    for r in records:
        counts[r.outcome] += 1
        if r.recovery_applied:
            inv_fidelities.append(r.fidelity)
        else:
            singular += 1
    freqs = counts / n

    expected = _expected_distribution(channel, fixed_phi, haar, use_paper_gates)
    mask = expected > 0
    chi_sq = float(
        (((counts[mask] - n * expected[mask]) ** 2) / (n * expected[mask])).sum()
    )
    dof = max(int(mask.sum()) - 1, 1)
    threshold = float(chi2.ppf(_CHI2_QUANTILE, dof))

    return BatchSummary(
        channel=channel,
        trials=n,
        empirical_outcome_frequencies=tuple(float(f) for f in freqs),
        mean_fidelity_invertible=(
            float(np.mean(inv_fidelities)) if inv_fidelities else None
        ),
        singular_outcome_rate=singular / n,
        chi_square_vs_born=chi_sq,
        chi_square_dof=dof,
        chi_square_threshold=threshold,
        chi_square_flagged=chi_sq > threshold,
    )
