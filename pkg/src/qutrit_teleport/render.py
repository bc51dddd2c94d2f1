"""Plain-text, Markdown and LaTeX renderers for CLI output.

Rendering is purely presentational; every number passes through the exact
layer first.  The LaTeX gate table mirrors the printed teleportation-table
layout (channel basis state, pre-measurement state, gate, residual,
classification) so a regenerated table can be diffed against the original
side by side.
"""

from __future__ import annotations

from fractions import Fraction

from . import analysis, engine
from .basis import all_states, expand_product, gram_matrix
from .exact import ExtScalar
from .linalg import Ket, LinearForm, Operator3
from .published import ErrataReport

ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX")


def channel_name(i: int, roman: bool = False) -> str:
    return f"{i} ({ROMAN[i]})" if roman else str(i)


# -- scalars -------------------------------------------------------------------


def scalar_text(x: ExtScalar) -> str:
    return str(x)


def _frac_latex(f: Fraction) -> str:
    sign = "-" if f < 0 else ""
    mag = abs(f)
    if mag.denominator == 1:
        return f"{sign}{mag.numerator}"
    return f"{sign}\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"


def scalar_latex(x: ExtScalar) -> str:
    parts = []
    for coeff, surd in ((x.q1, None), (x.q2, 2), (x.q3, 3), (x.q6, 6)):
        if coeff == 0:
            continue
        body = _frac_latex(coeff)
        if surd is not None:
            if abs(coeff) == 1:
                body = ("-" if coeff < 0 else "") + f"\\sqrt{{{surd}}}"
            else:
                body += f"\\sqrt{{{surd}}}"
        parts.append(body)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# -- kets and gates --------------------------------------------------------------


def _pair_label(flat: int) -> str:
    return f"|{flat // 3}⟩|{flat % 3}⟩"


def constant_ket_text(ket: Ket) -> str:
    terms = []
    for flat, amp in enumerate(ket.amps):
        if amp.is_zero():
            continue
        label = _pair_label(flat) if ket.dim == 9 else f"|{flat}⟩"
        terms.append(f"({scalar_text(amp)}){label}")
    return " + ".join(terms) if terms else "0"


def symbolic_ket_text(ket: Ket) -> str:
    terms = []
    for b, form in enumerate(ket.amps):
        if form.is_zero():
            continue
        terms.append(f"[{form}]|{b}⟩")
    return " + ".join(terms) if terms else "0"


def form_latex(form: LinearForm) -> str:
    parts = []
    for coeff, name in ((form.coef0, "c_0"), (form.coef1, "c_1"), (form.coef2, "c_2")):
        if coeff.is_zero():
            continue
        parts.append(f"({scalar_latex(coeff)}){name}")
    return "+".join(parts) if parts else "0"


def symbolic_ket_latex(ket: Ket) -> str:
    terms = []
    for b, form in enumerate(ket.amps):
        if form.is_zero():
            continue
        terms.append(f"\\big[{form_latex(form)}\\big]\\ket{{{b}}}")
    return "+".join(terms) if terms else "0"


def gate_text(g: Operator3) -> str:
    width = max(len(scalar_text(g.entry(r, c))) for r in range(3) for c in range(3))
    lines = []
    for r in range(3):
        cells = ", ".join(f"{scalar_text(g.entry(r, c)):>{width}}" for c in range(3))
        lines.append(f"  [ {cells} ]")
    return "\n".join(lines)


def gate_latex(g: Operator3) -> str:
    rows = " \\\\ ".join(
        " & ".join(scalar_latex(g.entry(r, c)) for c in range(3)) for r in range(3)
    )
    return f"\\begin{{pmatrix}} {rows} \\end{{pmatrix}}"


# -- basis documents --------------------------------------------------------------


def basis_text() -> str:
    lines = ["Entangled two-qutrit basis (site pair A2,B)", ""]
    for state in all_states():
        lines.append(
            f"Psi_{state.index} [{state.family}]: {constant_ket_text(state.ket)}"
        )
    lines.append("")
    lines.append("Gram matrix <Psi_a|Psi_b>:")
    for row in gram_matrix():
        lines.append("  [" + ", ".join(scalar_text(x) for x in row) + "]")
    lines.append("")
    lines.append("Inversion rows |a2>|b> = sum_i coeff_i |Psi_i>:")
    for a2 in range(3):
        for b in range(3):
            row = expand_product(a2, b)
            terms = [
                f"({scalar_text(c)})Psi_{i}"
                for i, c in enumerate(row.coefficients)
                if not c.is_zero()
            ]
            lines.append(f"  |{a2}>|{b}> = " + " + ".join(terms))
    return "\n".join(lines) + "\n"


def basis_latex() -> str:
    lines = ["% entangled basis states", "\\begin{align}"]
    for state in all_states():
        terms = []
        for flat, amp in enumerate(state.ket.amps):
            if amp.is_zero():
                continue
            coeff = scalar_latex(amp)
            terms.append(
                f"({coeff})\\ket{{{flat // 3}_{{A_2}}}}\\ket{{{flat % 3}_B}}"
            )
        body = "+".join(terms)
        sep = "\\\\" if state.index < 8 else ""
        lines.append(f"\\ket{{\\Psi_{{{state.index}}}}}_{{A_2B}} &= {body} {sep}")
    lines.append("\\end{align}")
    return "\n".join(lines) + "\n"


# -- gate table documents -----------------------------------------------------------


def derive_text(channels, roman: bool = False, outcome=None) -> str:
    outcomes = range(9) if outcome is None else (outcome,)
    lines = []
    for i in channels:
        lines.append(f"Channel {channel_name(i, roman)}")
        for k in outcomes:
            gate = engine.derive_gate(i, k)
            profile = analysis.profile_gate(gate)
            lines.append(
                f" outcome {k}: premeasure = {symbolic_ket_text(engine.premeasure(i, k))}"
            )
            lines.append(f"  gate ({profile.classification}, rank {profile.rank}):")
            lines.append(gate_text(gate))
        lines.append("")
    return "\n".join(lines) + "\n"


def derive_latex(channels, roman: bool = False, outcome=None) -> str:
    outcomes = range(9) if outcome is None else (outcome,)
    lines = []
    for i in channels:
        title = f"channel {channel_name(i, roman)}"
        lines.append(f"% teleportation table, {title}")
        lines.append("\\begin{tabular}{ccccc}")
        lines.append("\\toprule")
        lines.append(
            "Sender basis state & Pre-measurement state & Gate & $\\Delta_{QT}$ & Class \\\\"
        )
        lines.append("\\midrule")
        for k in outcomes:
            gate = engine.derive_gate(i, k)
            profile = analysis.profile_gate(gate)
            delta = engine.delta_qt(i, k, gate)
            delta_tex = "0" if delta.is_zero() else symbolic_ket_latex(delta)
            lines.append(
                f"$\\ket{{\\Psi_{{{k}}}}}$ & "
                f"${symbolic_ket_latex(engine.premeasure(i, k))}$ & "
                f"${gate_latex(gate)}$ & ${delta_tex}$ & "
                f"{profile.classification.replace('_', ' ')} \\\\"
            )
        lines.append("\\bottomrule")
        lines.append("\\end{tabular}")
        lines.append("")
    return "\n".join(lines) + "\n"


# -- errata documents ----------------------------------------------------------------


def _md(cell: str) -> str:
    return cell.replace("|", "\\|")


def errata_markdown(report: ErrataReport, roman: bool = False) -> str:
    lines = ["# Errata report", ""]
    lines.append("Summary by discrepancy class:")
    lines.append("")
    for name, count in sorted(report.summary.items()):
        lines.append(f"- `{name}`: {count}")
    lines.append("")
    by_channel = {}
    doc_level = []
    for e in report.entries:
        if e.channel is None:
            doc_level.append(e)
        else:
            by_channel.setdefault(e.channel, []).append(e)

    lines.append("## Document-level entries")
    lines.append("")
    lines.append("| location | printed label | kind | discrepancy | notes |")
    lines.append("| --- | --- | --- | --- | --- |")
    for e in doc_level:
        lines.append(
            f"| {_md(e.location)} | {_md(e.printed_label)} | {e.kind} "
            f"| {e.discrepancy} | {_md(e.notes)} |"
        )
    lines.append("")

    for channel in sorted(by_channel):
        lines.append(f"## Channel {channel_name(channel, roman)}")
        lines.append("")
        lines.append("| outcome | kind | location | printed label | discrepancy | notes |")
        lines.append("| --- | --- | --- | --- | --- | --- |")
        for e in by_channel[channel]:
            lines.append(
                f"| {e.outcome} | {e.kind} | {_md(e.location)} | {_md(e.printed_label)} "
                f"| {e.discrepancy} | {_md(e.notes)} |"
            )
        lines.append("")
    return "\n".join(lines) + "\n"


def errata_latex(report: ErrataReport) -> str:
    lines = ["% errata table", "\\begin{tabular}{llllp{5cm}}", "\\toprule"]
    lines.append("Location & Label & Kind & Discrepancy & Notes \\\\")
    lines.append("\\midrule")
    for e in report.entries:
        if e.discrepancy == "match":
            continue
        lines.append(
            f"{e.location} & {e.printed_label} & {e.kind} & {e.discrepancy} & {e.notes} \\\\"
        )
    lines.append("\\bottomrule")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


# -- analysis documents -----------------------------------------------------------------


def analysis_markdown(channels, roman: bool = False) -> str:
    lines = ["# Gate analysis", ""]
    for i in channels:
        comp = analysis.completeness(i)
        census = analysis.channel_census(i)
        lines.append(f"## Channel {channel_name(i, roman)}")
        lines.append("")
        lines.append(
            f"Completeness sum_k G^T G = identity: **{'yes' if comp.is_identity else 'NO'}**"
        )
        census_text = ", ".join(f"{name}: {count}" for name, count in sorted(census.items()))
        lines.append(f"Gate census: {census_text}")
        lines.append("")
        lines.append(
            "| outcome | tr G^T G | ||G^T G - I||_F^2 | scaled deviation | rank | class |"
        )
        lines.append("| --- | --- | --- | --- | --- | --- |")
        for k in range(9):
            p = analysis.profile_gate(engine.derive_gate(i, k))
            lines.append(
                f"| {k} | {scalar_text(p.frobenius_norm_sq)} "
                f"| {scalar_text(p.unitarity_deviation_sq)} "
                f"| {scalar_text(p.scaled_unitarity_deviation_sq)} "
                f"| {p.rank} | {p.classification} |"
            )
        lines.append("")
    return "\n".join(lines) + "\n"


def analysis_obj(channels) -> dict:
    out = {"channels": []}
    for i in channels:
        comp = analysis.completeness(i)
        census = analysis.channel_census(i)
        gates = []
        for k in range(9):
            p = analysis.profile_gate(engine.derive_gate(i, k))
            gates.append(
                {
                    "outcome": k,
                    "frobenius_norm_sq": p.frobenius_norm_sq.to_json_obj(),
                    "frobenius_norm_sq_float": float(p.frobenius_norm_sq),
                    "unitarity_deviation_sq": p.unitarity_deviation_sq.to_json_obj(),
                    "unitarity_deviation_sq_float": float(p.unitarity_deviation_sq),
                    "scaled_unitarity_deviation_sq": p.scaled_unitarity_deviation_sq.to_json_obj(),
                    "rank": p.rank,
                    "classification": p.classification,
                }
            )
        out["channels"].append(
            {
                "channel": i,
                "completeness_is_identity": comp.is_identity,
                "census": census,
                "gates": gates,
            }
        )
    return out
