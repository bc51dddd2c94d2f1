"""The nine SU(3) two-qutrit entangled states and their inversion rows.

The states form an orthonormal basis of the 9-dimensional two-site space:
one maximally entangled singlet, seven Bell-like pair states, and the
symmetric octet state.  `expand_product` inverts the construction: it
expresses each computational product state |a2>|b> in the entangled basis
by exact projection, never by transcribing the printed identities (those
transcriptions live in `published` and are diffed against these rows).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import INV_SQRT2, INV_SQRT3, ExtScalar
from .linalg import SITE_A2B, Ket, constant_ket, inner

FAMILY_SINGLET = "singlet"
FAMILY_BELL_LIKE = "bell_like"
FAMILY_OCTET = "octet"

_INV_SQRT6 = ExtScalar(q6=Fraction(1, 6))

# Amplitude tables: (normalization, ((a2, b, integer weight), ...)).
_STATE_TERMS = (
    (INV_SQRT3, ((0, 0, 1), (1, 1, 1), (2, 2, 1))),
    (INV_SQRT2, ((1, 0, 1), (0, 1, 1))),
    (INV_SQRT2, ((1, 0, 1), (0, 1, -1))),
    (INV_SQRT2, ((1, 1, -1), (2, 2, 1))),
    (INV_SQRT2, ((2, 0, 1), (0, 2, 1))),
    (INV_SQRT2, ((2, 0, 1), (0, 2, -1))),
    (INV_SQRT2, ((2, 1, 1), (1, 2, 1))),
    (INV_SQRT2, ((2, 1, 1), (1, 2, -1))),
    (_INV_SQRT6, ((0, 0, -2), (1, 1, 1), (2, 2, 1))),
)


@dataclass(frozen=True)
class EntangledState:
    index: int
    ket: Ket
    family: str


@dataclass(frozen=True)
class ExpansionRow:
    """|a2>|b> = sum_i coefficients[i] * |Psi_i>, coefficients exact."""

    a2: int
    b: int
    coefficients: tuple  # indexed by entangled-state index 0..8


def family_of(index: int) -> str:
    if index == 0:
        return FAMILY_SINGLET
    if index == 8:
        return FAMILY_OCTET
    return FAMILY_BELL_LIKE


@lru_cache(maxsize=None)
def entangled_state(index: int, site: str = SITE_A2B) -> EntangledState:
    """The i-th entangled basis state as an exact 9-dim constant ket."""
    if not 0 <= index <= 8:
        raise ValueError(f"entangled state index {index} out of range 0..8")
    scale, terms = _STATE_TERMS[index]
    amps = [ExtScalar()] * 9
    for a2, b, weight in terms:
        amps[3 * a2 + b] = scale * weight
    return EntangledState(index, constant_ket(amps, site), family_of(index))


def all_states(site: str = SITE_A2B) -> tuple:
    return tuple(entangled_state(i, site) for i in range(9))


def gram_matrix() -> tuple:
    """9x9 matrix of pairwise inner products <Psi_a|Psi_b>."""
    states = all_states()
    return tuple(
        tuple(inner(states[a].ket, states[b].ket) for b in range(9)) for a in range(9)
    )


def projector_sum() -> tuple:
    """sum_i |Psi_i><Psi_i| as an exact 9x9 matrix (completeness check)."""
    states = all_states()
    out = [[ExtScalar() for _ in range(9)] for _ in range(9)]
    for s in states:
        amps = s.ket.amps
        for r in range(9):
            if amps[r].is_zero():
                continue
            for c in range(9):
                out[r][c] = out[r][c] + amps[r] * amps[c]
    return tuple(tuple(row) for row in out)


@lru_cache(maxsize=None)
def expand_product(a2: int, b: int) -> ExpansionRow:
    """Entangled-basis expansion of |a2>|b>, by projection onto each state.

    Orthonormality (verified separately via `gram_matrix`) makes the
    projection coefficients exact and unique.
    """
    if not (0 <= a2 <= 2 and 0 <= b <= 2):
        raise ValueError("basis indices must lie in 0..2")
    flat = 3 * a2 + b
    coeffs = tuple(entangled_state(i).ket.amps[flat] for i in range(9))
    return ExpansionRow(a2, b, coeffs)


def reconstruct_product(row: ExpansionRow) -> Ket:
    """sum_i coefficients[i] * |Psi_i>; should equal the product state."""
    amps = [ExtScalar()] * 9
    for i in range(9):
        state = entangled_state(i)
        for flat in range(9):
            amps[flat] = amps[flat] + row.coefficients[i] * state.ket.amps[flat]
    return constant_ket(amps, SITE_A2B)
