"""Gate diagnostics: non-unitarity, completeness, recovery and fidelity.

The exact layer computes, per gate, the Frobenius weight tr(G^T G), the
deviation of G^T G from the identity, the deviation from the nearest
scalar multiple of the identity, and the rank, all over the exact field,
so rank-2 is distinguishable from nearly-rank-2.  Gates fall into three
classes: proportional to a unitary (deterministic recovery), invertible
but not proportional to a unitary, and singular (part of the input is
destroyed; no deterministic recovery).

The numeric layer evaluates Born-rule outcome probabilities and
post-recovery fidelities in floating point from the exact gates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import engine
from .exact import ExtScalar
from .linalg import Operator3, PROVENANCE_RECOVERY

CLASS_PROP_UNITARY = "proportional_to_unitary"
CLASS_INVERTIBLE = "invertible_not_prop_unitary"
CLASS_SINGULAR = "singular"

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class GateProfile:
    channel: Optional[int]
    outcome: Optional[int]
    frobenius_norm_sq: ExtScalar
    unitarity_deviation_sq: ExtScalar
    scaled_unitarity_deviation_sq: ExtScalar
    rank: int
    classification: str


@dataclass(frozen=True)
class CompletenessResult:
    channel: int
    total: Operator3
    is_identity: bool


def _frobenius_sq(op: Operator3) -> ExtScalar:
    acc = ExtScalar()
    for r in range(3):
        for c in range(3):
            e = op.entry(r, c)
            acc = acc + e * e
    return acc


def profile_gate(g: Operator3) -> GateProfile:
    gram = g.dagger() @ g
    frob = gram.trace()
    identity = Operator3.identity()
    dev = _frobenius_sq(gram - identity)
    scaled_target = identity.scaled(frob * Fraction(1, 3))
    scaled_dev = _frobenius_sq(gram - scaled_target)
    rank = g.rank()
    if rank == 3 and scaled_dev.is_zero():
        classification = CLASS_PROP_UNITARY
    elif rank == 3:
        classification = CLASS_INVERTIBLE
    else:
        classification = CLASS_SINGULAR
    return GateProfile(
        channel=g.channel,
        outcome=g.outcome,
        frobenius_norm_sq=frob,
        unitarity_deviation_sq=dev,
        scaled_unitarity_deviation_sq=scaled_dev,
        rank=rank,
        classification=classification,
    )


def completeness(i: int, gates: Optional[Sequence[Operator3]] = None) -> CompletenessResult:
    """Exact sum_k G_k^T G_k for a channel, compared with the identity."""
    if gates is None:
        gates = [engine.derive_gate(i, k) for k in range(9)]
    total = Operator3.zero()
    for g in gates:
        total = total + (g.dagger() @ g)
    return CompletenessResult(i, total, (total - Operator3.identity()).is_zero())


def channel_census(i: int) -> dict:
    """Gate counts per classification for one channel's oracle gates."""
    counts = {CLASS_PROP_UNITARY: 0, CLASS_INVERTIBLE: 0, CLASS_SINGULAR: 0}
    for k in range(9):
        counts[profile_gate(engine.derive_gate(i, k)).classification] += 1
    return counts


# ---------------------------------------------------------------------------
# Numeric layer.
# ---------------------------------------------------------------------------


def gate_matrix(g: Operator3) -> np.ndarray:
    return np.array(
        [[float(g.entry(r, c)) for c in range(3)] for r in range(3)], dtype=float
    )


@lru_cache(maxsize=None)
def oracle_gate_stack(i: int) -> np.ndarray:
    """(9, 3, 3) float array of the channel's oracle gates."""
    return np.stack([gate_matrix(engine.derive_gate(i, k)) for k in range(9)])


@lru_cache(maxsize=None)
def oracle_effect_stack(i: int) -> np.ndarray:
    """(9, 3, 3) float array of G^T G per outcome (Born-rule effects)."""
    gates = oracle_gate_stack(i)
    return np.einsum("kji,kjl->kil", gates, gates)


def as_state(phi: Sequence[complex]) -> np.ndarray:
    v = np.asarray(phi, dtype=complex).reshape(3)
    norm = float(np.vdot(v, v).real)
    if abs(norm - 1.0) > _NORM_TOL:
        raise ValueError(f"input state norm {norm} differs from 1 beyond {_NORM_TOL}")
    return v


def outcome_distribution(i: int, phi: Sequence[complex]) -> np.ndarray:
    """Born probabilities over the nine outcomes for a normalized state."""
    v = as_state(phi)
    p = np.einsum("i,kij,j->k", v.conj(), oracle_effect_stack(i), v).real
    return np.clip(p, 0.0, None)


def outcome_probability(i: int, k: int, phi: Sequence[complex]) -> float:
    if not 0 <= k <= 8:
        raise ValueError(f"outcome index {k} out of range 0..8")
    return float(outcome_distribution(i, phi)[k])


def _rational_cbrt(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    num = _icbrt(f.numerator)
    den = _icbrt(f.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _icbrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = round(n ** (1.0 / 3.0)) if n else 0
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**3 == n:
            return cand
    return None


def _field_cbrt(x: ExtScalar) -> Optional[ExtScalar]:
    """Exact cube root within the field, for single-component elements."""
    components = [
        (x.q1, 1, "q1"),
        (x.q2, 2, "q2"),
        (x.q3, 3, "q3"),
        (x.q6, 6, "q6"),
    ]
    nonzero = [(coeff, surd, name) for coeff, surd, name in components if coeff != 0]
    if len(nonzero) != 1:
        return None
    coeff, surd, name = nonzero[0]
    if surd == 1:
        root = _rational_cbrt(coeff)
        return ExtScalar(root) if root is not None else None
    # (r*sqrt(m))^3 = r^3 * m * sqrt(m): need coeff/m to be a rational cube
    root = _rational_cbrt(coeff / surd)
    if root is None:
        return None
    return ExtScalar(**{name: root})


def recovery(g: Operator3) -> Optional[Operator3]:
    """Exact inverse of an invertible gate; None for singular gates.

    Conditioned on the outcome, the receiver's state is the gate acting on
    the input (up to normalization), so the inverse restores it exactly.
    The inverse is rescaled to determinant +/-1 whenever the field contains
    the required cube root; the overall scale never affects the recovered
    ray.
    """
    d = g.det()
    if d.is_zero():
        return None
    inv = g.adjugate().scaled(d.inverse())
    det_inv = inv.det()
    magnitude = det_inv if float(det_inv) > 0 else -det_inv
    root = _field_cbrt(magnitude)
    if root is not None and not root.is_zero():
        inv = inv.scaled(root.inverse())
    return inv.tagged(
        provenance=PROVENANCE_RECOVERY, channel=g.channel, outcome=g.outcome
    )


@lru_cache(maxsize=None)
def oracle_recovery(i: int, k: int) -> Optional[Operator3]:
    return recovery(engine.derive_gate(i, k))


@lru_cache(maxsize=None)
def oracle_recovery_matrix(i: int, k: int) -> Optional[np.ndarray]:
    rec = oracle_recovery(i, k)
    return None if rec is None else gate_matrix(rec)


def fidelity_after_recovery(i: int, k: int, phi: Sequence[complex]) -> Optional[float]:
    """|<phi|recovered>|^2 for channel i, outcome k; None when no recovery.

    Raises ValueError when the outcome has zero probability for this input
    (the conditional state is undefined there).
    """
    v = as_state(phi)
    p = outcome_probability(i, k, phi)
    if p <= 1e-15:
        raise ValueError(f"outcome {k} has zero probability for this input state")
    rec_matrix = oracle_recovery_matrix(i, k)
    if rec_matrix is None:
        return None
    post = oracle_gate_stack(i)[k] @ v
    post = post / np.linalg.norm(post)
    restored = rec_matrix @ post
    restored = restored / np.linalg.norm(restored)
    return float(abs(np.vdot(v, restored)) ** 2)


def expected_fidelities(i: int, phi: Sequence[complex]) -> dict:
    """Outcome-probability-weighted fidelity figures for one channel.

    Two clearly distinct numbers: `invertible` averages post-recovery
    fidelity over outcomes with a recovery map (each contributes 1 by
    construction); `all_outcomes` also scores singular outcomes by the
    overlap of the un-recovered conditional state with the input.
    """
    v = as_state(phi)
    p = outcome_distribution(i, phi)
    inv_weight = 0.0
    inv_acc = 0.0
    all_acc = 0.0
    for k in range(9):
        if p[k] <= 1e-15:
            continue
        gate = engine.derive_gate(i, k)
        fid = fidelity_after_recovery(i, k, phi)
        if fid is not None:
            inv_weight += p[k]
            inv_acc += p[k] * fid
            all_acc += p[k] * fid
        else:
            post = gate_matrix(gate) @ v
            post = post / np.linalg.norm(post)
            all_acc += p[k] * float(abs(np.vdot(v, post)) ** 2)
    return {
        "invertible_mass": inv_weight,
        "mean_fidelity_invertible": (inv_acc / inv_weight) if inv_weight > 0 else None,
        "mean_fidelity_all_outcomes": all_acc / float(p.sum()),
    }
