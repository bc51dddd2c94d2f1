"""Exact engine for SU(3) two-qutrit teleportation gates.

Constructs the nine entangled two-qutrit basis states, derives all 81
measurement gates from first principles in exact arithmetic over
Q(sqrt2, sqrt3), diffs them against the published tables into a
machine-readable errata report, analyzes gate non-unitarity and
completeness, and runs a seeded Monte-Carlo simulation of the three-party
protocol.
"""

from .exact import ExtScalar, rational
from .linalg import Ket, LinearForm, Operator3
from .basis import EntangledState, ExpansionRow, entangled_state, expand_product
from .engine import derive_all, derive_gate, premeasure
from .published import compare_tables
from .analysis import GateProfile, profile_gate, recovery
from .simulate import BatchSummary, TrialRecord, run_batch, run_trial

__all__ = [
    "ExtScalar",
    "rational",
    "Ket",
    "LinearForm",
    "Operator3",
    "EntangledState",
    "ExpansionRow",
    "entangled_state",
    "expand_product",
    "derive_all",
    "derive_gate",
    "premeasure",
    "compare_tables",
    "GateProfile",
    "profile_gate",
    "recovery",
    "BatchSummary",
    "TrialRecord",
    "run_batch",
    "run_trial",
]

__version__ = "0.1.0"
