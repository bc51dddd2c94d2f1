"""Derivation of all 81 teleportation measurement gates from first principles.

For each channel i the three-party composite state is the symbolic input
tensored with the shared entangled state.  Projecting onto each sender-side
entangled basis state yields the receiver's pre-measurement ket, and the
gate is read off as the unique matrix mapping the symbolic input to that
ket.  Everything is exact, so the defining residual

    premeasure(i, k) - gate(i, k) |phi>

vanishes identically, and the decomposition can be resummed to reproduce
the composite state entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .basis import entangled_state
from .linalg import (
    SITE_A1A2,
    SITE_A1A2B,
    Ket,
    Operator3,
    extract_gate,
    partial_inner,
    symbolic_input,
    tensor,
    zero_ket,
)


@dataclass(frozen=True)
class DecompositionRow:
    outcome: int
    premeasure: Ket
    gate: Operator3


@dataclass(frozen=True)
class ChannelDecomposition:
    channel: int
    composite: Ket
    rows: tuple


def _check_channel(i: int) -> None:
    if not 0 <= i <= 8:
        raise ValueError(f"channel index {i} out of range 0..8")


@lru_cache(maxsize=None)
def compose(i: int) -> Ket:
    """27-dim composite: symbolic input at A1 with entangled state at A2,B."""
    _check_channel(i)
    return tensor(symbolic_input(), entangled_state(i).ket)


@lru_cache(maxsize=None)
def premeasure(i: int, k: int) -> Ket:
    """Receiver-side conditional ket for channel i and sender outcome k."""
    _check_channel(i)
    _check_channel(k)
    bra = entangled_state(k, SITE_A1A2).ket
    return partial_inner(bra, compose(i))


@lru_cache(maxsize=None)
def derive_gate(i: int, k: int) -> Operator3:
    """The 3x3 measurement gate for (channel, outcome), tagged oracle."""
    return extract_gate(premeasure(i, k)).tagged(channel=i, outcome=k)


def decompose_channel(i: int) -> ChannelDecomposition:
    rows = tuple(
        DecompositionRow(k, premeasure(i, k), derive_gate(i, k)) for k in range(9)
    )
    return ChannelDecomposition(i, compose(i), rows)


def derive_all() -> tuple:
    """All nine channel decompositions (81 gates), deterministically."""
    return tuple(decompose_channel(i) for i in range(9))


def delta_qt(i: int, k: int, gate: Operator3) -> Ket:
    """Teleportation residual: premeasure(i, k) minus the gate acting on
    the symbolic input.  Zero for every oracle gate; generally nonzero for
    transcribed gates that disagree with the derivation."""
    return premeasure(i, k) - gate.apply(symbolic_input())


def reconstruct_composite(i: int) -> Ket:
    """Resum the decomposition; must equal compose(i) exactly."""
    _check_channel(i)
    total = zero_ket(27, SITE_A1A2B, symbolic=True)
    for k in range(9):
        total = total + tensor(entangled_state(k, SITE_A1A2).ket, premeasure(i, k))
    return total
