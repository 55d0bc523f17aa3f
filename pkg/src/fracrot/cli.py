"""Command-line surface for the rotation-power library.

Subcommands: matrix, power, rotate, interp, convergence, verify, log,
generator, semigroup.  One structured envelope (JSON object with stable key
order) is printed per invocation; interp and convergence default to CSV
table output, verify to one pass/fail line per property.

Numbers are printed with 17 significant digits so every double re-parses
exactly.  Exit codes: 0 success / all properties pass, 1 verification
failure, 2 usage error (including a zero axis), 3 engine domain error.
"""

import argparse
import json
import math
import sys

from . import fracpow, linalg3, rotation, verify
from .errors import FracrotError


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def format_number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "NaN"  # json module convention
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def to_json(obj) -> str:
    """Serialize an envelope with insertion-order keys and .17g floats."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {to_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    return format_number(obj)


def _print_csv(header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_number(v) for v in row))
    sys.stdout.write("\n".join(lines) + "\n")


def _print_envelope(envelope: dict) -> None:
    sys.stdout.write(to_json(envelope) + "\n")


def _matrix_result(m) -> list[float]:
    return [float(v) for v in m.reshape(9)]


# --------------------------------------------------------------------------
# argument helpers
# --------------------------------------------------------------------------

def _triple(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z — got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _angle(args, value: float) -> float:
    return math.radians(value) if args.degrees else value


def _quad_config(args) -> fracpow.QuadratureConfig:
    level = args.level if args.level is not None else fracpow.DEFAULT_CONFIG.level_or_nodes
    tol = args.tol if args.tol is not None else fracpow.DEFAULT_CONFIG.abs_tolerance
    return fracpow.QuadratureConfig(level_or_nodes=level, abs_tolerance=tol)


def _require_json(args) -> None:
    if args.output != "json":
        raise ValueError(f"command {args.command!r} only supports --output json")


# --------------------------------------------------------------------------
# command handlers
# --------------------------------------------------------------------------

def _cmd_matrix(args) -> int:
    _require_json(args)
    axis = rotation.unit_axis(args.axis)
    theta = _angle(args, args.angle)
    envelope = {
        "command": "matrix",
        "inputs": {"axis": list(axis), "angle": theta, "method": args.method},
        "method": args.method,
    }
    if args.method == "closed":
        result = rotation.rodrigues(axis, theta)
    elif args.method == "exp-generator":
        result = linalg3.mat_exp(theta * rotation.generator(axis))
    else:  # fracpow: route through the quadrature engine
        detailed = fracpow.real_power_detailed(
            rotation.quarter_turn(axis), 2.0 * theta / math.pi, _quad_config(args)
        )
        result = detailed.value
        envelope["inputs"]["level"] = _quad_config(args).level_or_nodes
        envelope["result"] = _matrix_result(result)
        envelope["error-estimate"] = detailed.error_estimate
        _print_envelope(envelope)
        return 0
    envelope["result"] = _matrix_result(result)
    _print_envelope(envelope)
    return 0


def _cmd_power(args) -> int:
    _require_json(args)
    axis = rotation.unit_axis(args.axis)
    envelope = {
        "command": "power",
        "inputs": {"axis": list(axis), "alpha": args.alpha, "method": args.method},
        "method": args.method,
    }
    if args.method == "closed":
        if -1.0 <= args.alpha <= 1.0:
            result = rotation.frac_power_closed(axis, args.alpha)
        else:
            result = rotation.rotation_of(axis, args.alpha * math.pi / 2.0)
        envelope["result"] = _matrix_result(result)
    else:  # quadrature
        cfg = _quad_config(args)
        detailed = fracpow.real_power_detailed(rotation.quarter_turn(axis), args.alpha, cfg)
        envelope["inputs"]["level"] = cfg.level_or_nodes
        envelope["result"] = _matrix_result(detailed.value)
        envelope["error-estimate"] = detailed.error_estimate
    _print_envelope(envelope)
    return 0


def _cmd_rotate(args) -> int:
    _require_json(args)
    axis = rotation.unit_axis(args.axis)
    theta = _angle(args, args.angle)
    u = linalg3.as_vec3(args.vector)
    moved = rotation.rotate_vector(axis, theta, u)
    _print_envelope({
        "command": "rotate",
        "inputs": {"axis": list(axis), "angle": theta, "vector": list(u)},
        "method": "closed",
        "result": [float(v) for v in moved],
    })
    return 0


def _cmd_log(args) -> int:
    _require_json(args)
    axis = rotation.unit_axis(args.axis)
    theta = _angle(args, args.angle)
    result = rotation.log_rotation(axis, theta)
    _print_envelope({
        "command": "log",
        "inputs": {"axis": list(axis), "angle": theta},
        "method": "closed",
        "result": _matrix_result(result),
    })
    return 0


def _cmd_generator(args) -> int:
    _require_json(args)
    axis = rotation.unit_axis(args.axis)
    _print_envelope({
        "command": "generator",
        "inputs": {"axis": list(axis)},
        "method": "closed",
        "result": _matrix_result(rotation.generator(axis)),
    })
    return 0


def _cmd_semigroup(args) -> int:
    _require_json(args)
    axis = rotation.unit_axis(args.axis)
    _print_envelope({
        "command": "semigroup",
        "inputs": {"axis": list(axis), "t": args.t},
        "method": "closed",
        "result": _matrix_result(rotation.semigroup(axis, args.t)),
    })
    return 0


def _cmd_interp(args) -> int:
    axis = rotation.unit_axis(args.axis)
    theta0 = _angle(args, args.theta_from)
    theta1 = _angle(args, args.theta_to)
    mats = rotation.interpolate(axis, theta0, theta1, args.steps)
    rows = []
    for k, m in enumerate(mats):
        theta_k = theta0 + k * (theta1 - theta0) / args.steps
        rows.append([k, theta_k] + _matrix_result(m))
    if args.output == "json":
        _print_envelope({
            "command": "interp",
            "inputs": {"axis": list(axis), "from": theta0, "to": theta1, "steps": args.steps},
            "method": "closed",
            "result": rows,
        })
    else:
        header = ["index", "theta"] + [f"r{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
        _print_csv(header, rows)
    return 0


def _cmd_convergence(args) -> int:
    axis = rotation.unit_axis(args.axis)
    report = fracpow.convergence_study(rotation.quarter_turn(axis), args.alpha, args.levels)
    rows = [[row.level, row.nodes, row.error] for row in report.rows]
    if args.output == "json":
        _print_envelope({
            "command": "convergence",
            "inputs": {"axis": list(axis), "alpha": args.alpha, "levels": args.levels},
            "method": fracpow.DOUBLE_EXPONENTIAL,
            "result": rows,
        })
    else:
        _print_csv(["level", "nodes", "frobenius-error"], rows)
    return 0


def _cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else 1e-8
    results = verify.run_suite(args.suite)
    all_pass = all(r.max_error <= tol for r in results)
    if args.output == "json":
        _print_envelope({
            "command": "verify",
            "inputs": {"suite": args.suite, "tol": tol},
            "method": "property-suite",
            "result": [
                {"property": r.name, "max-error": r.max_error, "status": "pass" if r.max_error <= tol else "fail"}
                for r in results
            ],
            "passed": all_pass,
        })
    elif args.output == "csv":
        _print_csv(
            ["property", "max-error", "status"],
            [[r.name, r.max_error, "pass" if r.max_error <= tol else "fail"] for r in results],
        )
    else:
        for r in results:
            status = "PASS" if r.max_error <= tol else "FAIL"
            sys.stdout.write(f"{status} {r.name} max_error={r.max_error:.3e} tol={tol:.1e}\n")
        n_pass = sum(1 for r in results if r.max_error <= tol)
        sys.stdout.write(f"verify[{args.suite}]: {n_pass}/{len(results)} properties passed\n")
    return 0 if all_pass else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracrot",
        description="3D rotations as real powers of the quarter-turn matrix, "
                    "with closed-form, quadrature, and exponential routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, angle=False, output_default="json", output_choices=("json",)):
        sp.add_argument("--axis", required=True, type=_triple, metavar="X,Y,Z",
                        help="rotation axis; normalized internally, norm >= 1e-9")
        if angle:
            sp.add_argument("--angle", required=True, type=float, help="angle (radians unless --degrees)")
            sp.add_argument("--degrees", action="store_true", help="interpret angles in degrees")
        sp.add_argument("--output", choices=list(output_choices), default=output_default)

    p = sub.add_parser("matrix", help="rotation matrix for an axis and angle")
    common(p, angle=True)
    p.add_argument("--method", choices=["closed", "fracpow", "exp-generator"], default="closed")
    p.add_argument("--level", type=int, default=None, help="quadrature level for --method fracpow")
    p.add_argument("--tol", type=float, default=None, help="quadrature convergence tolerance")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("power", help="power of the quarter turn about an axis")
    common(p)
    p.add_argument("--alpha", required=True, type=float, help="real exponent")
    p.add_argument("--method", choices=["closed", "quadrature"], default="closed")
    p.add_argument("--level", type=int, default=None, help="quadrature level for --method quadrature")
    p.add_argument("--tol", type=float, default=None, help="quadrature convergence tolerance")
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("rotate", help="rotate a vector about an axis")
    common(p, angle=True)
    p.add_argument("--vector", required=True, type=_triple, metavar="X,Y,Z", help="vector to rotate")
    p.set_defaults(func=_cmd_rotate)

    p = sub.add_parser("interp", help="sample rotations along an angle range (CSV)")
    common(p, output_default="csv", output_choices=("csv", "json"))
    p.add_argument("--from", dest="theta_from", required=True, type=float, help="start angle")
    p.add_argument("--to", dest="theta_to", required=True, type=float, help="end angle")
    p.add_argument("--degrees", action="store_true", help="interpret angles in degrees")
    p.add_argument("--steps", required=True, type=int, help="number of segments (>= 1)")
    p.set_defaults(func=_cmd_interp)

    p = sub.add_parser("convergence", help="quadrature error per level against the spectral oracle (CSV)")
    common(p, output_default="csv", output_choices=("csv", "json"))
    p.add_argument("--alpha", required=True, type=float, help="fractional exponent in (0, 1)")
    p.add_argument("--levels", required=True, type=_int_list, metavar="A,B,C", help="increasing levels")
    p.set_defaults(func=_cmd_convergence)

    p = sub.add_parser("verify", help="run the numerical property suites")
    p.add_argument("--suite", choices=list(verify.SUITES), default="all")
    p.add_argument("--tol", type=float, default=None, help="pass/fail threshold (default 1e-8)")
    p.add_argument("--output", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("log", help="principal logarithm of the rotation (|angle| < pi)")
    common(p, angle=True)
    p.set_defaults(func=_cmd_log)

    p = sub.add_parser("generator", help="skew-symmetric generator of the rotation group about an axis")
    common(p)
    p.set_defaults(func=_cmd_generator)

    p = sub.add_parser("semigroup", help="explicit matrix of exp(t * quarter turn)")
    common(p)
    p.add_argument("--t", required=True, type=float, help="semigroup parameter")
    p.set_defaults(func=_cmd_semigroup)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FracrotError as exc:
        _print_envelope({
            "command": args.command,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        })
        return 3
    except ValueError as exc:
        sys.stderr.write(f"fracrot {args.command}: {exc}\n")
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
