"""Command-line interface.

Subcommands: basis, derive, verify, compare, analyze, simulate, export,
import.  Exit codes: 0 success, 1 usage error, 2 a verification
subcommand found a violated invariant or mismatch.  Output is written to
stdout unless --out is given; identical invocations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Optional

from . import analysis, engine, published, render, serialize, simulate
from . import __version__
from .basis import expand_product, gram_matrix, projector_sum, reconstruct_product
from .exact import ExtScalar
from .linalg import Operator3, basis_ket, tensor

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems with exit code 1."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="qutrit-teleport")
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", metavar="PATH", help="write output to PATH")
        return p

    p = add("basis", "print the nine entangled states and their Gram matrix")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = add("derive", "derive pre-measurement states and measurement gates")
    p.add_argument("--channel", type=int, choices=range(9), metavar="I")
    p.add_argument("--outcome", type=int, choices=range(9), metavar="K")
    p.add_argument("--format", choices=("json", "latex", "text"), default="text")
    p.add_argument("--roman", action="store_true", help="also show channel numerals")

    p = add("verify", "run the full exact identity suite")

    p = add("compare", "diff the transcribed tables against the derivation")
    p.add_argument("--format", choices=("json", "markdown", "latex"), default="markdown")
    p.add_argument("--fail-on-mismatch", action="store_true")
    p.add_argument("--roman", action="store_true")

    p = add("analyze", "per-gate non-unitarity profile and completeness verdicts")
    p.add_argument("--channel", type=int, choices=range(9), metavar="I")
    p.add_argument("--format", choices=("json", "markdown"), default="markdown")
    p.add_argument("--roman", action="store_true")

    p = add("simulate", "run the seeded three-party protocol simulation")
    p.add_argument("--channel", type=int, choices=range(9), required=True, metavar="I")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--state",
        metavar="c0r,c0i,c1r,c1i,c2r,c2i",
        help="input state as six comma-separated components (default |0>)",
    )
    group.add_argument("--haar", action="store_true", help="draw inputs uniformly")
    p.add_argument("--use-paper-gates", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = add("export", "write the full 81-gate oracle table as JSON")

    p = sub.add_parser("import", help="read a gate table and check it against the derivation")
    p.add_argument("path", metavar="PATH")

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_state(raw: Optional[str]):
    if raw is None:
        return (1.0, 0.0, 0.0)
    parts = raw.split(",")
    if len(parts) != 6:
        raise _UsageError("--state needs six comma-separated numbers")
    try:
        vals = [float(x) for x in parts]
    except ValueError:
        raise _UsageError("--state components must be numbers")
    return (
        complex(vals[0], vals[1]),
        complex(vals[2], vals[3]),
        complex(vals[4], vals[5]),
    )


# -- subcommand handlers ---------------------------------------------------------


def _cmd_basis(args) -> int:
    if args.format == "text":
        _emit(render.basis_text(), args.out)
    elif args.format == "latex":
        _emit(render.basis_latex(), args.out)
    else:
        from .basis import all_states

        doc = {
            "states": [
                {
                    "index": s.index,
                    "family": s.family,
                    "amplitudes": [a.to_json_obj() for a in s.ket.amps],
                }
                for s in all_states()
            ],
            "gram": [[x.to_json_obj() for x in row] for row in gram_matrix()],
        }
        _emit(serialize.dumps_canonical(doc), args.out)
    return EXIT_OK


def _selected(args):
    channels = [args.channel] if args.channel is not None else list(range(9))
    return channels


def _cmd_derive(args) -> int:
    channels = _selected(args)
    if args.format == "json":
        gates = {}
        for i in channels:
            for k in range(9):
                if args.outcome is not None and k != args.outcome:
                    continue
                gates[(i, k)] = engine.derive_gate(i, k)
        _emit(serialize.gate_table_dumps(gates), args.out)
    elif args.format == "latex":
        _emit(render.derive_latex(channels, args.roman, args.outcome), args.out)
    else:
        if args.outcome is not None and args.channel is not None:
            gate = engine.derive_gate(args.channel, args.outcome)
            text = (
                f"Channel {render.channel_name(args.channel, args.roman)}, "
                f"outcome {args.outcome}\n"
                f"premeasure = {render.symbolic_ket_text(engine.premeasure(args.channel, args.outcome))}\n"
                f"{render.gate_text(gate)}\n"
            )
            _emit(text, args.out)
        else:
            _emit(render.derive_text(channels, args.roman, args.outcome), args.out)
    return EXIT_OK


def _verify_checks():
    identity9 = tuple(
        tuple(ExtScalar(1 if r == c else 0) for c in range(9)) for r in range(9)
    )

    def orthonormal():
        return gram_matrix() == identity9

    def basis_complete():
        return projector_sum() == identity9

    def inversion_roundtrip():
        for a2 in range(3):
            for b in range(3):
                product = tensor(basis_ket(a2, site="A2"), basis_ket(b, site="B"))
                if reconstruct_product(expand_product(a2, b)).amps != product.amps:
                    return False
        return True

    def gate_residuals():
        return all(
            engine.delta_qt(i, k, engine.derive_gate(i, k)).is_zero()
            for i in range(9)
            for k in range(9)
        )

    def channel_reconstruction():
        return all(
            engine.reconstruct_composite(i).amps == engine.compose(i).amps
            for i in range(9)
        )

    def measurement_completeness():
        return all(analysis.completeness(i).is_identity for i in range(9))

    def non_unitarity():
        identity = Operator3.identity()
        for i in range(9):
            for k in range(9):
                g = engine.derive_gate(i, k)
                if ((g.dagger() @ g) - identity).is_zero():
                    return False
        return True

    return (
        ("orthonormality of the entangled basis", orthonormal),
        ("completeness of the entangled basis", basis_complete),
        ("product-state inversion round-trip", inversion_roundtrip),
        ("teleportation residual zero for all 81 gates", gate_residuals),
        ("composite-state reconstruction per channel", channel_reconstruction),
        ("measurement completeness per channel", measurement_completeness),
        ("non-unitarity of all 81 gates", non_unitarity),
    )


def _cmd_verify(args) -> int:
    failures = 0
    lines = []
    for name, check in _verify_checks():
        ok = check()
        lines.append(f"{'ok  ' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1
    lines.append(
        "all checks passed" if failures == 0 else f"{failures} check(s) failed"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def _cmd_compare(args) -> int:
    report = published.compare_tables()
    if args.format == "json":
        _emit(serialize.errata_dumps(report), args.out)
    elif args.format == "latex":
        _emit(render.errata_latex(report), args.out)
    else:
        _emit(render.errata_markdown(report, args.roman), args.out)
    if args.fail_on_mismatch and report.mismatches():
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_analyze(args) -> int:
    channels = _selected(args)
    if args.format == "json":
        _emit(serialize.dumps_canonical(render.analysis_obj(channels)), args.out)
    else:
        _emit(render.analysis_markdown(channels, args.roman), args.out)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    if args.trials < 1:
        raise _UsageError("--trials must be at least 1")
    state = None if args.haar else _parse_state(args.state)
    try:
        summary, records = simulate.run_batch_records(
            args.channel,
            args.trials,
            args.seed,
            input_state=state,
            haar=args.haar,
            use_paper_gates=args.use_paper_gates,
        )
    except ValueError as exc:
        raise _UsageError(str(exc))
    if args.format == "json":
        doc = serialize.simulation_to_obj(
            summary,
            records,
            master_seed=args.seed,
            mode="haar" if args.haar else "fixed",
            use_paper_gates=args.use_paper_gates,
        )
        _emit(serialize.dumps_canonical(doc), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["trial_index", "outcome", "probability", "fidelity", "recovery_applied"]
        )
        for idx, rec in enumerate(records):
            writer.writerow(
                [
                    idx,
                    rec.outcome,
                    repr(rec.outcome_probability),
                    "" if rec.fidelity is None else repr(rec.fidelity),
                    rec.recovery_applied,
                ]
            )
        _emit(buf.getvalue(), args.out)
    return EXIT_OK


def _cmd_export(args) -> int:
    gates = {(i, k): engine.derive_gate(i, k) for i in range(9) for k in range(9)}
    _emit(serialize.gate_table_dumps(gates), args.out)
    return EXIT_OK


def _cmd_import(args) -> int:
    with open(args.path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        gates = serialize.gate_table_loads(text)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"malformed gate table: {exc}\n")
        return EXIT_VIOLATION
    mismatched = [
        key for key, g in sorted(gates.items()) if g != engine.derive_gate(*key)
    ]
    if mismatched:
        sys.stdout.write(
            f"{len(mismatched)} of {len(gates)} gates differ from the derivation: "
            + ", ".join(str(k) for k in mismatched[:8])
            + ("..." if len(mismatched) > 8 else "")
            + "\n"
        )
        return EXIT_VIOLATION
    sys.stdout.write(f"{len(gates)} gates match the derivation exactly\n")
    return EXIT_OK


_HANDLERS = {
    "basis": _cmd_basis,
    "derive": _cmd_derive,
    "verify": _cmd_verify,
    "compare": _cmd_compare,
    "analyze": _cmd_analyze,
    "simulate": _cmd_simulate,
    "export": _cmd_export,
    "import": _cmd_import,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
