"""Command line interface: analyze, transform, verify, orbit, sample.

File formats
------------
State file (JSON), amplitudes ordered |00>, |01>, |10>, |11>:

    {"amplitudes": [[re, im], [re, im], [re, im], [re, im]]}

Transform file (JSON):

    {"variant": "so2xsu2" | "su2xso2", "theta": number,
     "a": [re, im], "b": [re, im]}

Report file (JSON): the dictionary form of a DiagramReport.  Orbit output is
CSV with header ``step,u0,u1,u2,u3,u4``.

Exit codes: 0 success or verification pass, 1 verification failure, 2 usage
or input error, 3 mathematical domain error.  The environment variable
``QGEO_TOL`` overrides the default verification tolerance.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path

from .quaternion import INFINITY
from .states import (
    TwoQubitState,
    concurrence_term,
    haar_random_state,
    is_separable,
    quaternionify,
    schmidt_term,
    wootters_preconcurrence,
)
from .conformal import conformal_map, inverse_stereographic, schmidt_concurrence_form
from .local_unitary import LocalUnitary, SO2Element, SU2Element, Variant, apply_cb
from .moebius import apply_moebius_q, moebius_from_local_unitary
from .diagrams import DEFAULT_SUITE_TOL, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

# Norm deviation tolerated in input files (renormalized with a warning).
FILE_NORM_TOL = 1e-6
# Below this deviation renormalization is skipped entirely.
_SILENT_NORM_TOL = 1e-12


class CliError(Exception):
    """Input or usage failure carrying its exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _load_json(path: str) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliError(EXIT_USAGE, f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise CliError(
            EXIT_USAGE, f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc.strerror or exc}") from None


def _parse_pair(value, where: str, path: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise CliError(EXIT_USAGE, f"{path}: {where} must be a [re, im] pair of numbers")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise CliError(EXIT_USAGE, f"{path}: {where} must be finite")
    return complex(re, im)


def load_state(path: str) -> TwoQubitState:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "amplitudes" not in doc:
        raise CliError(EXIT_USAGE, f"{path}: expected an object with an 'amplitudes' field")
    amps = doc["amplitudes"]
    if not isinstance(amps, list) or len(amps) != 4:
        raise CliError(EXIT_USAGE, f"{path}: amplitudes must list exactly 4 [re, im] pairs")
    values = [_parse_pair(v, f"amplitudes[{k}]", path) for k, v in enumerate(amps)]
    norm = math.sqrt(sum(z.real * z.real + z.imag * z.imag for z in values))
    if norm < 1e-9:
        raise CliError(EXIT_DOMAIN, f"{path}: state vector is zero")
    if abs(norm - 1.0) > FILE_NORM_TOL:
        raise CliError(EXIT_USAGE, f"{path}: amplitudes norm {norm!r} is not within 1e-06 of 1")
    if abs(norm - 1.0) > _SILENT_NORM_TOL:
        _warn(f"{path}: renormalizing amplitudes (norm deviation {abs(norm - 1.0):.3e})")
        values = [z / norm for z in values]
    return TwoQubitState(*values)


def load_transform(path: str) -> LocalUnitary:
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise CliError(EXIT_USAGE, f"{path}: expected a JSON object")
    for field in ("variant", "theta", "a", "b"):
        if field not in doc:
            raise CliError(EXIT_USAGE, f"{path}: missing field '{field}'")
    try:
        variant = Variant(doc["variant"])
    except ValueError:
        raise CliError(
            EXIT_USAGE, f"{path}: variant must be 'so2xsu2' or 'su2xso2', got {doc['variant']!r}"
        ) from None
    theta = doc["theta"]
    if not isinstance(theta, (int, float)) or isinstance(theta, bool) or not math.isfinite(theta):
        raise CliError(EXIT_USAGE, f"{path}: theta must be a finite number")
    a = _parse_pair(doc["a"], "a", path)
    b = _parse_pair(doc["b"], "b", path)
    norm_sq = abs(a) ** 2 + abs(b) ** 2
    if abs(norm_sq - 1.0) > FILE_NORM_TOL:
        raise CliError(
            EXIT_USAGE, f"{path}: |a|^2 + |b|^2 = {norm_sq!r} is not within 1e-06 of 1"
        )
    if abs(norm_sq - 1.0) > _SILENT_NORM_TOL:
        _warn(f"{path}: renormalizing SU(2) parameters (deviation {abs(norm_sq - 1.0):.3e})")
        n = math.sqrt(norm_sq)
        a, b = a / n, b / n
    return LocalUnitary(variant, SO2Element(float(theta)), SU2Element(a, b))


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def state_to_doc(psi: TwoQubitState) -> dict:
    return {"amplitudes": [_pair(psi.alpha), _pair(psi.beta), _pair(psi.gamma), _pair(psi.delta)]}


def _write_json(path: str, doc: dict) -> None:
    try:
        Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"{path}: cannot write: {exc.strerror or exc}") from None


def _sc_doc(psi: TwoQubitState) -> dict:
    return {
        "schmidt_term": _pair(schmidt_term(psi)),
        "concurrence_term": _pair(concurrence_term(psi)),
    }


def _default_tol() -> float:
    raw = os.environ.get("QGEO_TOL")
    if raw is None:
        return DEFAULT_SUITE_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise CliError(EXIT_USAGE, f"QGEO_TOL={raw!r} is not a number") from None
    if not math.isfinite(tol) or tol <= 0:
        raise CliError(EXIT_USAGE, f"QGEO_TOL={raw!r} must be a positive number")
    return tol


def cmd_analyze(args) -> int:
    psi = load_state(args.state)
    qb = quaternionify(psi)
    try:
        image = conformal_map(qb)
    except ZeroDivisionError as exc:
        raise CliError(EXIT_DOMAIN, f"conformal image undefined: {exc}") from None
    _, q2_norm_sq = schmidt_concurrence_form(psi)
    out = {
        "schmidt_term": _pair(schmidt_term(psi)),
        "concurrence_term": _pair(concurrence_term(psi)),
        "wootters_preconcurrence": _pair(wootters_preconcurrence(psi)),
        "q1_norm_sq": qb.q1.norm_sq(),
        "q2_norm_sq": q2_norm_sq,
        "conformal_image": "inf" if image is INFINITY else list(image.as_reals()),
        "separable": is_separable(psi, tol=_default_tol()),
        "s4_point": [float(v) for v in inverse_stereographic(image)],
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_transform(args) -> int:
    psi = load_state(args.state)
    u = load_transform(args.transform)
    out_state = apply_cb(u, psi)
    _write_json(args.out, state_to_doc(out_state))
    print(json.dumps({"before": _sc_doc(psi), "after": _sc_doc(out_state)}, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise CliError(EXIT_USAGE, "--trials must be at least 1")
    tol = args.tol if args.tol is not None else _default_tol()
    if not math.isfinite(tol) or tol <= 0:
        raise CliError(EXIT_USAGE, "--tol must be a positive number")
    report = run_suite(args.trials, args.seed, tol)
    doc = report.to_dict()
    if args.report is not None:
        _write_json(args.report, doc)
    print(json.dumps(doc, indent=2))
    return EXIT_OK if report.overall_pass else EXIT_VERIFY_FAIL


def cmd_orbit(args) -> int:
    if args.steps < 0:
        raise CliError(EXIT_USAGE, "--steps must be non-negative")
    psi = load_state(args.state)
    u = load_transform(args.transform)
    if u.variant is not Variant.SO2_X_SU2:
        raise CliError(
            EXIT_USAGE,
            f"{args.transform}: orbit requires variant 'so2xsu2'; no Moebius map "
            "intertwines the 'su2xso2' action",
        )
    try:
        point = conformal_map(quaternionify(psi))
    except ZeroDivisionError as exc:
        raise CliError(EXIT_DOMAIN, f"conformal image undefined: {exc}") from None
    f = moebius_from_local_unitary(u)
    rows = []
    for step in range(args.steps + 1):
        rows.append([step] + [float(v) for v in inverse_stereographic(point)])
        point = apply_moebius_q(f, point)
    try:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["step", "u0", "u1", "u2", "u3", "u4"])
            writer.writerows(rows)
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"{args.out}: cannot write: {exc.strerror or exc}") from None
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.count < 1:
        raise CliError(EXIT_USAGE, "--count must be at least 1")
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"{args.out}: cannot create directory: {exc.strerror or exc}") from None
    for k in range(args.count):
        psi = haar_random_state([args.seed, k])
        _write_json(str(out_dir / f"state_{k:04d}.json"), state_to_doc(psi))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgeo",
        description=(
            "Quaternionic geometry of two-qubit states: analyze conformal images, "
            "apply local unitaries, verify the intertwining identities, and trace "
            "Moebius orbits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print Schmidt/concurrence data and the conformal image")
    p.add_argument("state", help="state JSON file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", help="apply a local unitary to a state file")
    p.add_argument("state", help="input state JSON file")
    p.add_argument("transform", help="transform JSON file")
    p.add_argument("out", help="output state JSON file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="run the randomized verification suite")
    p.add_argument("--trials", type=int, default=10000, help="trials per check (default 10000)")
    p.add_argument("--seed", type=int, default=42, help="base seed (default 42)")
    p.add_argument("--tol", type=float, default=None, help="suite tolerance (default 1e-10 or QGEO_TOL)")
    p.add_argument("--report", default=None, help="also write the JSON report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="trace Moebius iterates of a state's conformal image")
    p.add_argument("state", help="state JSON file")
    p.add_argument("transform", help="transform JSON file (variant so2xsu2)")
    p.add_argument("--steps", type=int, default=100, help="number of iterates (default 100)")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("sample", help="write uniformly random state files")
    p.add_argument("--count", type=int, default=1, help="number of states (default 1)")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, matching our convention.
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
