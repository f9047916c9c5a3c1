"""``qutrit-phase`` command line.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 domain error
(not a state), 4 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import coherent, phase_ops, povm, verification
from .algebra import star
from .errors import MismatchedN, NotAState, NotPure, QuadratureBudgetExceeded, SingularDesign
from .states import PureState, as_density, bloch_from_density, is_pure_bloch, opening_angle, state_from_descriptor

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DOMAIN, EXIT_NUMERIC = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _cpx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix(m) -> list:
    return [[_cpx(z) for z in row] for row in np.asarray(m)]


def _read_json(source: str | None):
    if source is None:
        raise InputError("--input is required")
    try:
        if source == "-":
            text = sys.stdin.read()
        elif source.lstrip().startswith(("{", "[")):
            text = source
        else:
            text = Path(source).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON input: {exc}") from exc


def _load_state(source):
    try:
        return state_from_descriptor(_read_json(source))
    except NotAState:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed state descriptor: {exc}") from exc


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit_json(obj, output):
    _emit(json.dumps(obj, indent=2), output)


def _log(msg: str):
    print(msg, file=sys.stderr)


def bloch_report(state, tol: float = 1e-8) -> dict:
    n = bloch_from_density(as_density(state))
    pure = is_pure_bloch(n, tol)
    angles = None
    if pure:
        angles = {str(k): opening_angle(n, PureState.basis(k).bloch()) for k in (1, 2, 3)}
    return {
        "bloch": n.n.tolist(),
        "pure": pure,
        "checks": {
            "norm": n.norm,
            "n_dot_n_minus_1": float(n.n @ n.n - 1),
            "star_residual": float(np.abs(star(n.n, n.n) - n.n).max()),
            "opening_angles": angles,
        },
    }


def cmd_bloch(args) -> int:
    report = bloch_report(_load_state(args.input), args.tol)
    _emit_json(report, args.output)
    _log(f"|n| = {report['checks']['norm']:.12g}, pure = {report['pure']}")
    return EXIT_OK


def phase_ops_report() -> dict:
    ops = {}
    for pair in phase_ops.PAIRS:
        R, op = phase_ops.polar_decompose(pair)
        ops[str(pair)] = {
            "E": _matrix(op.E),
            "R": _matrix(R),
            "eigensystem": [
                {"eigenvalue": _cpx(val), "phase": ph, "eigenvector": [_cpx(c) for c in vec.amplitudes]}
                for val, vec, ph in zip(op.eigenvalues, op.eigenvectors, op.phases)
            ],
            "polar_residual": phase_ops.polar_residual(pair),
            "unitarity_residual": phase_ops.unitarity_residual(op.E),
        }
    deviation, table = phase_ops.check_noncommutativity()
    return {"operators": ops, "noncommutativity": {"E12E23_minus_E13": deviation, "commutators": table}}


def cmd_phase_ops(args) -> int:
    report = phase_ops_report()
    _emit_json(report, args.output)
    _log(f"||E12 E23 - E13|| = {report['noncommutativity']['E12E23_minus_E13']:.6g}")
    return EXIT_OK


def cmd_phase_dist(args) -> int:
    if not 4 <= args.resolution <= 4096:
        raise InputError("--resolution must lie in [4, 4096]")
    if not 0 <= args.gamma <= 1:
        raise InputError("--gamma must lie in [0, 1]")
    state = _load_state(args.input)
    grid = povm.density_grid(state, args.resolution, povm.PovmParams.symmetric(args.gamma))
    _emit(grid.to_csv(), args.output)
    total = grid.riemann_sum()
    _log(f"Riemann sum of P = {total:.15g} (deviation {abs(total - 1):.3g}); min P = {grid.values.min():.6g}")
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = verification.SUITES if args.suite == "all" else (args.suite,)
    scheme = coherent.QuadratureScheme(args.radial_nodes or 64, args.phase_nodes or 16)
    checks = verification.run(suites, seed=args.seed, scheme=scheme, tol=args.tol)
    ok = all(c.passed for c in checks)
    _emit_json({"passed": ok, "seed": args.seed, "checks": [c.to_dict() for c in checks]}, args.output)
    for c in checks:
        _log(f"[{'PASS' if c.passed else 'FAIL'}] {c.suite}/{c.name}: {c.value:.3e} ({c.mode} {c.bound:.1e})  {c.relation}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reconstruct(args) -> int:
    data = _read_json(args.input)
    try:
        raw = data["samples"] if isinstance(data, dict) else data
        samples = [((float(s["phi12"]), float(s["phi23"])), float(s["P"])) for s in raw]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed samples: {exc}") from exc
    if len(samples) != 6:
        raise InputError(f"exactly six samples are required, got {len(samples)}")
    rec = povm.reconstruct_offdiagonals(samples)
    _emit_json({"rho12": _cpx(rec.rho12), "rho23": _cpx(rec.rho23), "rho13": _cpx(rec.rho13),
                "condition_number": rec.condition_number}, args.output)
    _log(f"design condition number {rec.condition_number:.6g}")
    return EXIT_OK


def _label(d, N) -> coherent.CoherentLabel:
    return coherent.CoherentLabel(N, complex(*d["alpha"]), complex(*d["beta"]))


def cmd_coherent(args) -> int:
    data = _read_json(args.input)
    try:
        N = int(data["N"])
        a = _label(data, N)
        b = _label(data["other"], int(data["other"].get("N", N))) if "other" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed coherent label: {exc}") from exc
    mv = coherent.mean_values(a)
    out = {
        "N": N,
        "C": a.C,
        "mean_values": {"n1": mv.n1, "n2": mv.n2, "n3": mv.n3,
                        "s32": _cpx(mv.s32), "s21": _cpx(mv.s21), "s31": _cpx(mv.s31)},
    }
    if b is not None:
        out["overlap"] = _cpx(coherent.overlap(a, b))
    _emit_json(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qutrit-phase", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, need_input=True):
        if need_input:
            p.add_argument("--input", help="JSON file, '-' for stdin, or inline JSON")
        p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("bloch", help="Bloch vector, purity and opening angles of a state")
    io(p)
    p.add_argument("--tol", type=float, default=1e-8, help="purity tolerance")
    p.set_defaults(func=cmd_bloch)

    p = sub.add_parser("phase-ops", help="phase operators, eigensystems and commutators")
    io(p, need_input=False)
    p.set_defaults(func=cmd_phase_ops)

    p = sub.add_parser("phase-dist", help="phase probability density on a grid, as CSV")
    io(p)
    p.add_argument("--resolution", type=int, default=64)
    p.add_argument("--gamma", type=float, default=1.0)
    p.set_defaults(func=cmd_phase_dist)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=(*verification.SUITES, "all"))
    io(p, need_input=False)
    p.add_argument("--radial-nodes", type=int, default=None, help="identity-resolution radial nodes (64)")
    p.add_argument("--phase-nodes", type=int, default=None, help="identity-resolution phase nodes (16)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12, help="tolerance for the exact algebraic checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", help="recover rho12, rho23, rho13 from six density samples")
    io(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("coherent", help="mean values and overlap of su(3) coherent states")
    io(p)
    p.set_defaults(func=cmd_coherent)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _log(f"input error: {exc}")
        return EXIT_INPUT
    except (NotAState, NotPure, MismatchedN) as exc:
        _log(f"domain error: {exc}")
        return EXIT_DOMAIN
    except (SingularDesign, QuadratureBudgetExceeded) as exc:
        _log(f"numerical failure: {exc}")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
