"""Command-line surface: one subcommand per computation plus parameter sweeps.

Records are emitted as JSON (default) or CSV.  Identical invocations produce
byte-identical output.  Exit codes: 0 success, 1 domain error (bad physics
input), 2 usage error (bad flags).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from ._angles import TWO_PI
from .berry import (
    berry_phase_analytic,
    berry_phase_entangled,
    connection,
    holonomy_numeric,
    spinor_loop,
)
from .circuits import Orientation, SpinorParams, format_circuit, parse_circuit, run_circuit
from .entangle import (
    BellCoefficients,
    BipartiteCoefficients,
    RgFlowParams,
    concurrence_general,
    entanglement_entropy,
    evolve_bell,
    monopole_strength_rg,
    swap_expectation,
)
from .errors import DomainError
from .noise import (
    NoiseSpec,
    NoiseTarget,
    entangled_noise_shift,
    noisy_phase,
    post_echo_noise_shift,
)
from .rabi import RabiParams, evolve_coefficients, spin_echo_ledger
from .states import ket

_SWEEP_FLAGS = {
    "theta": "--theta",
    "delta_theta": "--delta-theta",
    "omega_t": "--t",
    "separation": "--separation",
}


class _UsageError(Exception):
    """Bad flag combination caught after argparse; maps to exit code 2."""


@dataclass(frozen=True)
class RunRecord:
    """One completed computation: the command, its real inputs, real outputs,
    and string metadata (phase conventions, clamp flags, and the like)."""

    command: str
    inputs: dict[str, float]
    outputs: dict[str, float]
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.outputs:
            raise DomainError("a record needs at least one output")
        for group in (self.inputs, self.outputs):
            for name, value in group.items():
                if not math.isfinite(value):
                    raise DomainError(f"record value {name} must be finite")

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": dict(sorted(self.inputs.items())),
            "outputs": dict(sorted(self.outputs.items())),
            "metadata": dict(sorted(self.metadata.items())),
        }


@dataclass(frozen=True)
class SweepSpec:
    """Uniform inclusive grid over one named real parameter."""

    parameter: str
    start: float
    stop: float
    steps: int

    def __post_init__(self) -> None:
        if self.parameter not in _SWEEP_FLAGS:
            raise DomainError(f"parameter must be one of {sorted(_SWEEP_FLAGS)}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise DomainError("start and stop must be finite")
        if not self.start < self.stop:
            raise DomainError("start must be below stop")
        if self.steps < 2:
            raise DomainError("steps must be at least 2")


def _csv_real(value: float) -> str:
    return format(float(value), ".12g")


def emit(records: Sequence[RunRecord], format: str) -> bytes:
    """Serialize records to a byte stream, JSON by default or flat CSV.

    CSV columns are the sorted input names then the sorted output names, reals
    printed to 12 significant digits; JSON mirrors the records exactly.
    """
    if format == "json":
        payload = [r.as_dict() for r in records]
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if format != "csv":
        raise DomainError(f"unknown format {format!r}")
    if not records:
        return b""
    in_names = sorted(records[0].inputs)
    out_names = sorted(records[0].outputs)
    for record in records[1:]:
        if sorted(record.inputs) != in_names or sorted(record.outputs) != out_names:
            raise DomainError("csv output needs records with a common shape")
    lines = [",".join(in_names + out_names)]
    for record in records:
        cells = [_csv_real(record.inputs[k]) for k in in_names]
        cells += [_csv_real(record.outputs[k]) for k in out_names]
        lines.append(",".join(cells))
    return ("\n".join(lines) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# flag parsing


def _complex_flag(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--output", default=None, metavar="PATH")

    parser = argparse.ArgumentParser(
        prog="spinphase",
        description="Geometric phases of driven spin-1/2 systems, from the command line.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("phase", parents=[common], allow_abbrev=False,
                       help="analytic closed-loop phase of one spinor")
    p.add_argument("--spin", choices=("up", "down"), required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--degrees", action="store_true", help="read --theta in degrees")

    p = sub.add_parser("holonomy", parents=[common], allow_abbrev=False,
                       help="discrete loop-transport phase against the analytic value")
    p.add_argument("--spin", choices=("up", "down"), required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--segments", type=int, default=20000)

    p = sub.add_parser("circuit", parents=[common], allow_abbrev=False,
                       help="run a circuit file on |0>")
    p.add_argument("--file", required=True, metavar="PATH")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)

    p = sub.add_parser("rabi", parents=[common], allow_abbrev=False,
                       help="resonant coefficient evolution")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--c0", type=_complex_flag, required=True, metavar="RE[,IM]")
    p.add_argument("--c1", type=_complex_flag, required=True, metavar="RE[,IM]")

    p = sub.add_parser("echo", parents=[common], allow_abbrev=False,
                       help="two-pulse echo phase ledger")
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--chi", type=float, required=True)

    p = sub.add_parser("entangle", parents=[common], allow_abbrev=False,
                       help="Bell-state evolution under one spinor loop")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--alpha", type=_complex_flag, required=True, metavar="RE[,IM]")
    p.add_argument("--beta", type=_complex_flag, required=True, metavar="RE[,IM]")

    p = sub.add_parser("noise", parents=[common], allow_abbrev=False,
                       help="first-order phase shifts from polar-angle noise")
    p.add_argument("--spin", choices=("up", "down", "entangled"), required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--delta-theta", dest="delta_theta", type=float, required=True)

    p = sub.add_parser("rgflow", parents=[common], allow_abbrev=False,
                       help="monopole strength under the length-scale flow")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--separation", type=float, required=True)

    p = sub.add_parser("sweep", parents=[common], allow_abbrev=False,
                       help="run another command over a uniform parameter grid")
    p.add_argument("--cmd", required=True, metavar="COMMAND")
    p.add_argument("--param", required=True, choices=sorted(_SWEEP_FLAGS))
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)

    return parser


# ---------------------------------------------------------------------------
# command runners


def _run_phase(args: argparse.Namespace) -> list[RunRecord]:
    orientation = Orientation(args.spin)
    theta = math.radians(args.theta) if args.degrees else args.theta
    gp = berry_phase_analytic(orientation, theta)
    return [RunRecord(
        command="phase",
        inputs={"theta": theta},
        outputs={
            "gamma": gp.value,
            "gamma_mod_2pi": gp.mod_2pi(),
            "connection": connection(orientation, theta),
        },
        metadata={"spin": args.spin, "phase_convention": "raw", "angle_unit": "radians"},
    )]


def _run_holonomy(args: argparse.Namespace) -> list[RunRecord]:
    orientation = Orientation(args.spin)
    loop = spinor_loop(orientation, args.theta, args.segments)
    transported = holonomy_numeric(loop)
    reference = berry_phase_analytic(orientation, args.theta)
    deviation = abs(transported.value - reference.mod_2pi())
    deviation = min(deviation, TWO_PI - deviation)  # circular distance
    return [RunRecord(
        command="holonomy",
        inputs={"theta": args.theta, "segments": float(args.segments)},
        outputs={
            "holonomy": transported.value,
            "gamma_analytic": reference.value,
            "deviation": deviation,
        },
        metadata={"spin": args.spin, "phase_convention": "mod2pi"},
    )]


def _run_circuit(args: argparse.Namespace) -> list[RunRecord]:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read circuit file: {exc}") from exc
    circuit = parse_circuit(text)
    state = run_circuit(circuit, {"theta": args.theta, "phi": args.phi}, ket("0"))
    a = state.amplitudes
    return [RunRecord(
        command="circuit",
        inputs={"theta": args.theta, "phi": args.phi},
        outputs={
            "amp0_re": a[0].real, "amp0_im": a[0].imag,
            "amp1_re": a[1].real, "amp1_im": a[1].imag,
        },
        metadata={"circuit": format_circuit(circuit), "phase_convention": "none"},
    )]


def _run_rabi(args: argparse.Namespace) -> list[RunRecord]:
    params = RabiParams(omega0=0.0, omega=args.omega, duration=args.t)
    c0, c1 = evolve_coefficients(args.c0, args.c1, params)
    return [RunRecord(
        command="rabi",
        inputs={
            "omega": args.omega, "t": args.t,
            "c0_re": args.c0.real, "c0_im": args.c0.imag,
            "c1_re": args.c1.real, "c1_im": args.c1.imag,
        },
        outputs={
            "c0_out_re": c0.real, "c0_out_im": c0.imag,
            "c1_out_re": c1.real, "c1_out_im": c1.imag,
        },
        metadata={"phase_convention": "none"},
    )]


def _run_echo(args: argparse.Namespace) -> list[RunRecord]:
    ledger = spin_echo_ledger(SpinorParams(theta=math.pi, phi=args.phi, chi=args.chi))
    return [RunRecord(
        command="echo",
        inputs={"phi": args.phi, "chi": args.chi},
        outputs={
            "geometric": ledger.geometric,
            "dynamical": ledger.dynamical,
            "total": ledger.total,
            "geometric_magnitude": abs(ledger.geometric),
        },
        metadata={"phase_convention": "raw_signed"},
    )]


def _run_entangle(args: argparse.Namespace) -> list[RunRecord]:
    coeffs = BellCoefficients(args.alpha, args.beta)
    state, relative_phase = evolve_bell(coeffs, args.theta)
    conc = concurrence_general(BipartiteCoefficients.from_state(state))
    conc_norm = min(abs(conc), 1.0)  # guard the last-ulp overshoot
    a = state.amplitudes
    return [RunRecord(
        command="entangle",
        inputs={
            "theta": args.theta,
            "alpha_re": args.alpha.real, "alpha_im": args.alpha.imag,
            "beta_re": args.beta.real, "beta_im": args.beta.imag,
        },
        outputs={
            "amp00_re": a[0].real, "amp00_im": a[0].imag,
            "amp01_re": a[1].real, "amp01_im": a[1].imag,
            "amp10_re": a[2].real, "amp10_im": a[2].imag,
            "amp11_re": a[3].real, "amp11_im": a[3].imag,
            "relative_phase": relative_phase,
            "swap_expectation": swap_expectation(state),
            "concurrence_norm": conc_norm,
            "entropy_bits": entanglement_entropy(conc_norm),
            "gamma_ent": berry_phase_entangled(args.theta).value,
        },
        metadata={"phase_convention": "gamma_ent=raw,relative_phase=mod2pi"},
    )]


def _run_noise(args: argparse.Namespace) -> list[RunRecord]:
    target = NoiseTarget(args.spin)
    spec = NoiseSpec(args.delta_theta, target)
    inputs = {"theta": args.theta, "delta_theta": args.delta_theta}
    if target is NoiseTarget.ENTANGLED:
        return [RunRecord(
            command="noise",
            inputs=inputs,
            outputs={
                "entangled_shift": entangled_noise_shift(args.theta, spec),
                "post_echo_shift": post_echo_noise_shift(args.theta, spec),
            },
            metadata={
                "spin": args.spin,
                "phase_convention": "raw",
                "post_echo_comparison": "qualitative",
            },
        )]
    gp, shift = noisy_phase(Orientation(args.spin), args.theta, spec)
    return [RunRecord(
        command="noise",
        inputs=inputs,
        outputs={"gamma_noisy": gp.value, "shift": shift},
        metadata={"spin": args.spin, "phase_convention": "raw"},
    )]


def _run_rgflow(args: argparse.Namespace) -> list[RunRecord]:
    params = RgFlowParams(args.a, args.c, args.separation)
    unclamped = -params.a * math.log(params.separation) + params.c
    return [RunRecord(
        command="rgflow",
        inputs={"a": args.a, "c": args.c, "separation": args.separation},
        outputs={"mu": monopole_strength_rg(params)},
        metadata={
            "mu_clamped": "true" if unclamped < 0.0 else "false",
            "phase_convention": "none",
        },
    )]


_RUNNERS = {
    "phase": _run_phase,
    "holonomy": _run_holonomy,
    "circuit": _run_circuit,
    "rabi": _run_rabi,
    "echo": _run_echo,
    "entangle": _run_entangle,
    "noise": _run_noise,
    "rgflow": _run_rgflow,
}


# ---------------------------------------------------------------------------
# sweeps


def _sweep_argv(subcommand: str, spec: SweepSpec, extra_argv: list[str]) -> list[RunRecord]:
    if subcommand not in _RUNNERS:
        raise _UsageError(f"--cmd must be one of {sorted(_RUNNERS)}")
    flag = _SWEEP_FLAGS[spec.parameter]
    parser = _build_parser()
    records: list[RunRecord] = []
    for value in np.linspace(spec.start, spec.stop, spec.steps):
        value = float(value)
        argv = [subcommand, *extra_argv, flag, repr(value)]
        try:
            args, leftover = parser.parse_known_args(argv)
        except SystemExit as exc:
            raise _UsageError(
                f"fixed flags do not fit {subcommand}: {' '.join(extra_argv)}"
            ) from exc
        if leftover:
            raise _UsageError(f"unrecognized arguments: {' '.join(leftover)}")
        try:
            produced = _RUNNERS[subcommand](args)
        except DomainError as exc:
            raise DomainError(f"at {spec.parameter}={value!r}: {exc}") from exc
        for record in produced:
            records.append(replace(record, metadata={**record.metadata, "swept": spec.parameter}))
    return records


def sweep(subcommand: str, spec: SweepSpec, fixed: Mapping[str, object]) -> list[RunRecord]:
    """Run one subcommand over the grid, one record per point, in grid order.

    fixed supplies the non-swept flags by name (leading dashes optional);
    True/False switch bare flags on and off, other values are stringified.
    """
    extra: list[str] = []
    for name, value in fixed.items():
        flag = name if name.startswith("--") else f"--{name}"
        if value is True:
            extra.append(flag)
        elif value is False or value is None:
            continue
        elif isinstance(value, float):
            extra.extend([flag, repr(value)])
        else:
            extra.extend([flag, str(value)])
    try:
        return _sweep_argv(subcommand, spec, extra)
    except _UsageError as exc:
        raise DomainError(str(exc)) from exc


def _run_sweep(args: argparse.Namespace, extras: list[str]) -> list[RunRecord]:
    try:
        spec = SweepSpec(args.param, args.start, args.stop, args.steps)
    except DomainError as exc:
        raise _UsageError(str(exc)) from exc
    return _sweep_argv(args.cmd, spec, extras)


# ---------------------------------------------------------------------------
# entry points


def run_records(argv: Sequence[str]) -> list[RunRecord]:
    """Parse argv and build the records, without serializing or exiting.

    Raises SystemExit (from argparse), _UsageError, or DomainError; mainly a
    seam for tests and for callers who want records rather than bytes.
    """
    parser = _build_parser()
    args, extras = parser.parse_known_args(list(argv))
    if args.command == "sweep":
        return _run_sweep(args, extras)
    if extras:
        raise _UsageError(f"unrecognized arguments: {' '.join(extras)}")
    return _RUNNERS[args.command](args)


def dispatch(argv: Sequence[str]) -> int:
    """Run one invocation; returns the process exit code instead of exiting."""
    try:
        records = run_records(argv)
        parser_args, _ = _build_parser().parse_known_args(list(argv))
        payload = emit(records, parser_args.format)
        if parser_args.output:
            try:
                Path(parser_args.output).write_bytes(payload)
            except OSError as exc:
                raise DomainError(f"cannot write output file: {exc}") from exc
        else:
            sys.stdout.write(payload.decode("utf-8"))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    except _UsageError as exc:
        print(f"spinphase: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        command = argv[0] if argv else "spinphase"
        print(f"{command}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    raise SystemExit(dispatch(sys.argv[1:]))
