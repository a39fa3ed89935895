"""Command-line front end.

Subcommands: gen3 and gen4 print a generated W state next to its closed-form
coefficients; teleport3, teleport4 and bidirectional run transfer sessions
branch by branch; efficiency and table3 print resource-efficiency records.
Output is plain text or JSON (--output json); JSON is emitted with sorted
keys so identical configurations and seeds give byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from itertools import product

import numpy as np

from .circuits import (WParams, apply_circuit, build_w3_generator,
                       build_w4_generator, w3_closed_form, w3_coefficients,
                       w4_closed_form, w4_coefficients)
from .efficiency import EfficiencyRecord, comparison_table
from .protocol import (FIDELITY_TOL, all_correction_keys, run_bidirectional,
                       run_teleport_w3, run_teleport_w4)
from .statevector import new_zero_state, state_dump

_ANGLES = ("theta0", "phi0", "theta1", "phi1")


def _add_angle_args(parser: argparse.ArgumentParser, suffix: str = "", label: str = "") -> None:
    for name in _ANGLES:
        parser.add_argument(f"--{name}{suffix}", type=float, default=0.0,
                            help=f"{name}{' for ' + label if label else ''} (radians unless --degrees)")


def _add_common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--degrees", action="store_true",
                        help="interpret the angle flags as degrees")
    parser.add_argument("--random-params", action="store_true",
                        help="ignore the angle flags and draw angles from --seed")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for random parameters and sampled branches")
    parser.add_argument("--output", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wteleport",
        description="Generate W states and teleport them over Bell-pair channels.")
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd, particles in (("gen3", "three"), ("gen4", "four")):
        p = sub.add_parser(cmd, help=f"generate the {particles}-particle W state")
        _add_angle_args(p)
        _add_common_args(p)
        p.add_argument("--dump-circuit", action="store_true",
                       help="also print the generator gate list")

    for cmd, particles in (("teleport3", "three"), ("teleport4", "four")):
        p = sub.add_parser(cmd, help=f"teleport the {particles}-particle W state")
        _add_angle_args(p)
        _add_common_args(p)
        p.add_argument("--branch-mode", choices=("all", "random", "fixed"), default="all",
                       help="enumerate all 16 branches, sample one, or force one")
        p.add_argument("--branch", default=None,
                       help="branch key like '+-01' (required with --branch-mode fixed)")

    p = sub.add_parser("bidirectional",
                       help="exchange three- and four-particle W states both ways")
    _add_angle_args(p, label="the three-particle sender")
    _add_angle_args(p, suffix="-b", label="the four-particle sender")
    _add_common_args(p)
    p.add_argument("--branch-mode", choices=("all", "random", "fixed"), default="all",
                   help="enumerate all 256 branch pairs, sample one, or force one")
    p.add_argument("--branch", default=None, help="forced branch for the three-particle direction")
    p.add_argument("--branch-b", default=None, help="forced branch for the four-particle direction")

    p = sub.add_parser("efficiency", help="efficiency record for explicit resource counts")
    p.add_argument("--transmitted", type=int, required=True, help="qubits transmitted")
    p.add_argument("--channel", type=int, required=True, help="channel qubits consumed")
    p.add_argument("--classical", type=int, required=True, help="classical bits sent")
    p.add_argument("--ancilla", type=int, required=True, help="ancilla qubits consumed")
    p.add_argument("--label", default="custom")
    p.add_argument("--output", choices=("text", "json"), default="text")

    p = sub.add_parser("table3", help="print the seven-row efficiency comparison")
    p.add_argument("--output", choices=("text", "json"), default="text")

    return parser


def _resolve_params(args, suffix: str = "", rng: np.random.Generator | None = None) -> WParams:
    if args.random_params:
        return WParams.random(rng)
    attr = lambda name: getattr(args, f"{name}{suffix}")
    scale = math.pi / 180.0 if args.degrees else 1.0
    return WParams(*(attr(name) * scale for name in _ANGLES))


def _emit(doc: dict, text: str, output: str) -> None:
    if output == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _params_dict(p: WParams) -> dict:
    return {"theta0": p.theta0, "phi0": p.phi0, "theta1": p.theta1, "phi1": p.phi1}


def _run_gen(args, command: str) -> int:
    rng = np.random.default_rng(args.seed)
    params = _resolve_params(args, rng=rng)
    if command == "gen3":
        circuit, target = build_w3_generator(params), w3_closed_form(params)
        coeffs, labels = w3_coefficients(params), ["100", "010", "001"]
    else:
        circuit, target = build_w4_generator(params), w4_closed_form(params)
        coeffs, labels = w4_coefficients(params), ["0010", "0100", "1000", "0001"]
    state = apply_circuit(new_zero_state(circuit.num_qubits), circuit)
    max_error = float(np.max(np.abs(state.amps - target.amps)))

    doc = {
        "schema": 1,
        "command": command,
        "params": _params_dict(params),
        "state": state_dump(state),
        "coefficients": [[c.real, c.imag] for c in coeffs],
        "basis_labels": labels,
        "max_error": max_error,
    }
    lines = [f"{command}: params {_params_dict(params)}"]
    lines.append(f"{'basis':>6}  {'circuit amplitude':>38}  {'closed form':>38}")
    for label, c in zip(labels, coeffs):
        amp = state.amps[int(label, 2)]
        lines.append(f"|{label}>  {amp.real:+.12f}{amp.imag:+.12f}j  {c.real:+.12f}{c.imag:+.12f}j")
    lines.append(f"max elementwise error: {max_error:.3e}")
    if args.dump_circuit:
        doc["circuit"] = circuit.to_records()
        lines.append("generator gates:")
        lines.append(circuit.to_text())
    _emit(doc, "\n".join(lines), args.output)
    return 0


def _summarize(transcripts) -> dict:
    fidelities = [f for t in transcripts for f in t.final_fidelities]
    return {
        "branches": len(transcripts),
        "min_fidelity": min(fidelities),
        "max_fidelity": max(fidelities),
        "all_ok": all(t.ok for t in transcripts),
    }


def _transcript_lines(transcripts) -> list[str]:
    lines = []
    for t in transcripts:
        for leg in t.legs:
            lines.append(f"branch {leg.key.text} [{leg.direction}]  fidelity {leg.final_fidelity:.12f}"
                         f"  correction {leg.correction.text}  bits {leg.classical_bits_sent}")
    return lines


def _run_teleport(args, command: str) -> int:
    rng = np.random.default_rng(args.seed)
    params = _resolve_params(args, rng=rng)
    run = run_teleport_w3 if command == "teleport3" else run_teleport_w4
    if args.branch_mode == "all":
        transcripts = [run(params, branch=key) for key in all_correction_keys()]
    elif args.branch_mode == "fixed":
        if args.branch is None:
            print("--branch-mode fixed needs --branch", file=sys.stderr)
            return 2
        transcripts = [run(params, branch=args.branch)]
    else:
        transcripts = [run(params, rng_seed=args.seed)]
    summary = _summarize(transcripts)
    doc = {
        "schema": 1,
        "command": command,
        "branch_mode": args.branch_mode,
        "seed": args.seed,
        "params": _params_dict(params),
        "transcripts": [t.to_dict() for t in transcripts],
        "summary": summary,
    }
    lines = [f"{command}: params {_params_dict(params)}"]
    lines += _transcript_lines(transcripts)
    lines.append(f"branches {summary['branches']}  min fidelity {summary['min_fidelity']:.12f}"
                 f"  all ok: {summary['all_ok']}")
    _emit(doc, "\n".join(lines), args.output)
    return 0 if summary["all_ok"] else 1


def _run_bidirectional(args) -> int:
    rng = np.random.default_rng(args.seed)
    params_a = _resolve_params(args, rng=rng)
    params_b = _resolve_params(args, suffix="_b", rng=rng)
    if args.branch_mode == "all":
        keys = all_correction_keys()
        transcripts = [run_bidirectional(params_a, params_b, branches=(ka, kb))
                       for ka, kb in product(keys, keys)]
    elif args.branch_mode == "fixed":
        if args.branch is None or args.branch_b is None:
            print("--branch-mode fixed needs --branch and --branch-b", file=sys.stderr)
            return 2
        transcripts = [run_bidirectional(params_a, params_b,
                                         branches=(args.branch, args.branch_b))]
    else:
        transcripts = [run_bidirectional(params_a, params_b, rng_seed=args.seed)]
    summary = _summarize(transcripts)
    doc = {
        "schema": 1,
        "command": "bidirectional",
        "branch_mode": args.branch_mode,
        "seed": args.seed,
        "params": _params_dict(params_a),
        "params_b": _params_dict(params_b),
        "transcripts": [t.to_dict() for t in transcripts],
        "summary": summary,
    }
    lines = [f"bidirectional: three-particle params {_params_dict(params_a)}",
             f"               four-particle params {_params_dict(params_b)}"]
    if summary["branches"] > 20:
        lines.append(f"({summary['branches']} branch pairs; per-branch lines omitted)")
    else:
        lines += _transcript_lines(transcripts)
    lines.append(f"branch pairs {summary['branches']}  min fidelity {summary['min_fidelity']:.12f}"
                 f"  all ok: {summary['all_ok']}")
    _emit(doc, "\n".join(lines), args.output)
    return 0 if summary["all_ok"] else 1


def _record_lines(records: list[EfficiencyRecord]) -> list[str]:
    lines = [f"{'scheme':<58} {'sent':>4} {'chan':>4} {'bits':>4} {'anc':>4} {'eta':>6} {'pct':>6}"]
    for r in records:
        lines.append(f"{r.label:<58} {r.transmitted_qubits:>4} {r.channel_qubits:>4}"
                     f" {r.classical_bits:>4} {r.ancilla_qubits:>4} {r.fraction_text:>6} {r.percent:>6}")
        if r.note:
            lines.append(f"    note: {r.note}")
    return lines


def _run_efficiency(args) -> int:
    record = EfficiencyRecord(args.label, args.transmitted, args.channel,
                              args.classical, args.ancilla)
    doc = {"schema": 1, "command": "efficiency", "record": record.to_dict()}
    _emit(doc, "\n".join(_record_lines([record])), args.output)
    return 0


def _run_table(args) -> int:
    rows = comparison_table()
    doc = {"schema": 1, "command": "table3", "rows": [r.to_dict() for r in rows]}
    _emit(doc, "\n".join(_record_lines(rows)), args.output)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("gen3", "gen4"):
        return _run_gen(args, args.command)
    if args.command in ("teleport3", "teleport4"):
        return _run_teleport(args, args.command)
    if args.command == "bidirectional":
        return _run_bidirectional(args)
    if args.command == "efficiency":
        return _run_efficiency(args)
    return _run_table(args)


if __name__ == "__main__":
    sys.exit(main())
