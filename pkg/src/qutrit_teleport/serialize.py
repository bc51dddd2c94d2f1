"""JSON wire formats and canonical serialization.

All JSON emitted by the package is canonical: sorted keys, two-space
indent, UTF-8, trailing newline, no timestamps, so identical invocations
produce byte-identical documents.  Exact scalars travel as "p/q" strings,
so export/import round-trips are exact, not approximate.

JSON Schemas for the three machine-readable documents (gate table, errata
report, batch summary) ship with the package under ``schemas/``.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Optional

from .basis import ExpansionRow
from .exact import ExtScalar
from .linalg import Ket, LinearForm, Operator3, SITE_B, linear_ket
from .published import (
    KIND_EXPANSION,
    KIND_GATE,
    KIND_LABEL,
    KIND_PREMEASURE,
    ErrataReport,
)
from .simulate import BatchSummary, TrialRecord


def dumps_canonical(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


# -- scalars, forms, kets, operators ----------------------------------------


def scalar_to_obj(x: ExtScalar) -> dict:
    return x.to_json_obj()


def scalar_from_obj(obj: dict) -> ExtScalar:
    return ExtScalar.from_json_obj(obj)


def form_to_obj(f: LinearForm) -> dict:
    return {
        "c0": scalar_to_obj(f.coef0),
        "c1": scalar_to_obj(f.coef1),
        "c2": scalar_to_obj(f.coef2),
    }


def form_from_obj(obj: dict) -> LinearForm:
    return LinearForm(
        scalar_from_obj(obj["c0"]),
        scalar_from_obj(obj["c1"]),
        scalar_from_obj(obj["c2"]),
    )


def ket_to_obj(k: Ket) -> dict:
    amp_objs = [
        scalar_to_obj(a) if k.constant else form_to_obj(a) for a in k.amps
    ]
    return {"site": k.site, "constant": k.constant, "amplitudes": amp_objs}


def symbolic_ket_from_obj(obj: dict) -> Ket:
    if obj.get("constant"):
        raise ValueError("expected a symbolic ket")
    return linear_ket(
        [form_from_obj(a) for a in obj["amplitudes"]], obj.get("site", SITE_B)
    )


def gate_to_obj(g: Operator3) -> dict:
    return {
        "channel": g.channel,
        "outcome": g.outcome,
        "provenance": g.provenance,
        "entries": [[scalar_to_obj(g.entry(r, c)) for c in range(3)] for r in range(3)],
    }


def gate_from_obj(obj: dict) -> Operator3:
    entries = obj["entries"]
    if len(entries) != 3 or any(len(row) != 3 for row in entries):
        raise ValueError("gate entries must form a 3x3 grid")
    rows = tuple(
        tuple(scalar_from_obj(cell) for cell in row) for row in entries
    )
    return Operator3(
        rows,
        provenance=obj.get("provenance", "oracle"),
        channel=obj.get("channel"),
        outcome=obj.get("outcome"),
    )


def expansion_to_obj(row: ExpansionRow) -> dict:
    return {
        "a2": row.a2,
        "b": row.b,
        "coefficients": [scalar_to_obj(c) for c in row.coefficients],
    }


# -- gate table --------------------------------------------------------------


def gate_table_to_obj(gates: dict) -> dict:
    ordered = [gates[key] for key in sorted(gates)]
    return {"gates": [gate_to_obj(g) for g in ordered]}


def gate_table_dumps(gates: dict) -> str:
    return dumps_canonical(gate_table_to_obj(gates))


def gate_table_loads(text: str) -> dict:
    doc = json.loads(text)
    gates = {}
    for obj in doc["gates"]:
        g = gate_from_obj(obj)
        if g.channel is None or g.outcome is None:
            raise ValueError("gate table entries need channel and outcome tags")
        key = (g.channel, g.outcome)
        if key in gates:
            raise ValueError(f"duplicate gate for channel/outcome {key}")
        gates[key] = g
    return gates


# -- errata report ------------------------------------------------------------


def _entry_value_to_obj(kind: str, value) -> Optional[object]:
    if value is None:
        return None
    if kind == KIND_GATE:
        return gate_to_obj(value)
    if kind == KIND_PREMEASURE:
        return ket_to_obj(value)
    if kind == KIND_EXPANSION:
        return expansion_to_obj(value)
    if kind == KIND_LABEL:
        return None
    raise ValueError(f"unknown entry kind {kind!r}")


def errata_to_obj(report: ErrataReport) -> dict:
    return {
        "summary": dict(report.summary),
        "entries": [
            {
                "location": e.location,
                "kind": e.kind,
                "channel": e.channel,
                "outcome": e.outcome,
                "printed_label": e.printed_label,
                "discrepancy": e.discrepancy,
                "notes": e.notes,
                "paper_value": _entry_value_to_obj(e.kind, e.paper_value),
                "oracle_value": _entry_value_to_obj(e.kind, e.oracle_value),
            }
            for e in report.entries
        ],
    }


def errata_dumps(report: ErrataReport) -> str:
    return dumps_canonical(errata_to_obj(report))


# -- simulation ----------------------------------------------------------------


def trial_to_obj(t: TrialRecord) -> dict:
    return {
        "channel": t.channel,
        "input_state": [[z.real, z.imag] for z in t.input_state],
        "outcome": t.outcome,
        "outcome_probability": t.outcome_probability,
        "classical_message": t.classical_message,
        "recovery_applied": t.recovery_applied,
        "fidelity": t.fidelity,
        "seed": t.seed,
        "event_log": [[name, party] for name, party in t.event_log],
    }


def summary_to_obj(s: BatchSummary) -> dict:
    return {
        "channel": s.channel,
        "trials": s.trials,
        "empirical_outcome_frequencies": list(s.empirical_outcome_frequencies),
        "mean_fidelity_invertible": s.mean_fidelity_invertible,
        "singular_outcome_rate": s.singular_outcome_rate,
        "chi_square_vs_born": s.chi_square_vs_born,
        "chi_square_dof": s.chi_square_dof,
        "chi_square_threshold": s.chi_square_threshold,
        "chi_square_flagged": s.chi_square_flagged,
    }


def simulation_to_obj(
    summary: BatchSummary,
    records,
    master_seed: int,
    mode: str,
    use_paper_gates: bool,
) -> dict:
    return {
        "channel": summary.channel,
        "trials": summary.trials,
        "master_seed": master_seed,
        "mode": mode,
        "use_paper_gates": use_paper_gates,
        "summary": summary_to_obj(summary),
        "trial_log": [trial_to_obj(t) for t in records],
    }


# -- schemas -------------------------------------------------------------------


def load_schema(name: str) -> dict:
    """Load one of the shipped JSON schemas by file name."""
    path = resources.files("qutrit_teleport").joinpath("schemas", name)
    return json.loads(path.read_text(encoding="utf-8"))
