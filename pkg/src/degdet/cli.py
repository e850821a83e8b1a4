"""Batch command-line front end.

Three subcommands: `degree` runs the determinant-based degree detector on a
problem file, `verify` replays the named identity suites with a seeded
generator, and `det` prints one exact determinant (direct and closed-form
routes, flagged if they ever disagree).

All rationals cross the I/O boundary as exact "p/q" strings; floats never
appear.  Exit codes: 0 all good, 1 verification failure, 2 usage or parse
error.  Report bytes on stdout are stable for fixed inputs and seed; wall
times go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .degreematrix import (
    DegreeMatrixSpec,
    build_A,
    build_A_sub,
    det_A_closed_form,
    det_A_sub_closed_form,
)
from .exactnum import (
    Rational,
    degree_to_str,
    det_fraction_free,
    format_rational,
    parse_rational,
    poly_shift_scale,
)
from .interp import (
    DETECTION_MODES,
    MODE_CLOSED_FORM,
    EquidistantProblem,
    detect_degree,
    interpolate_direct,
)
from .vandermonde import AffineData, build_B, det_B_expansion
from .verify import DEFAULT_SEED, SUITE_NAMES, SUITES, run_all, run_suite

ENV_SEED = "DEGDET_SEED"

_PROBLEM_FIELDS = ("ell", "xi", "h", "values")


class ProblemFileError(ValueError):
    """Problem-file rejection with line/field context baked into the message."""


@dataclass(frozen=True)
class ProblemFile:
    ell: int
    xi: Rational
    h: Rational
    values: tuple[Rational, ...]

    def to_problem(self) -> EquidistantProblem:
        return EquidistantProblem(self.ell, self.xi, self.h, self.values)


def parse_problem_file(text: str, source: str = "<input>") -> ProblemFile:
    """Parse the line-oriented `field: value` problem format.

    Fields: ell (positive integer), xi and h (rational strings, h nonzero),
    values (comma-separated rational strings, exactly ell+1 of them).
    Blank lines and '#' comments are ignored.
    """
    raw: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition(":")
        key = key.strip()
        if not sep or not key:
            raise ProblemFileError(f"{source}: line {lineno}: expected 'field: value', got {stripped!r}")
        if key not in _PROBLEM_FIELDS:
            raise ProblemFileError(
                f"{source}: line {lineno}: unknown field {key!r} (expected one of {', '.join(_PROBLEM_FIELDS)})"
            )
        if key in raw:
            raise ProblemFileError(f"{source}: line {lineno}: duplicate field {key!r}")
        raw[key] = (lineno, value.strip())

    for field_name in _PROBLEM_FIELDS:
        if field_name not in raw:
            raise ProblemFileError(f"{source}: missing field {field_name!r}")

    def fail(field_name: str, message: str) -> ProblemFileError:
        lineno = raw[field_name][0]
        return ProblemFileError(f"{source}: line {lineno}: field {field_name!r}: {message}")

    try:
        ell = int(raw["ell"][1])
    except ValueError:
        raise fail("ell", f"not an integer: {raw['ell'][1]!r}") from None
    if ell < 1:
        raise fail("ell", f"must be >= 1, got {ell}")
    try:
        xi = parse_rational(raw["xi"][1])
    except ValueError as exc:
        raise fail("xi", str(exc)) from None
    try:
        h = parse_rational(raw["h"][1])
    except ValueError as exc:
        raise fail("h", str(exc)) from None
    if h == 0:
        raise fail("h", "step must be nonzero")
    try:
        values = tuple(parse_rational(tok) for tok in raw["values"][1].split(","))
    except ValueError as exc:
        raise fail("values", str(exc)) from None
    if len(values) != ell + 1:
        raise fail("values", f"expected ell+1 = {ell + 1} entries, got {len(values)}")
    return ProblemFile(ell, xi, h, values)


def load_problem_file(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from None
    return parse_problem_file(text, source=path)


def _parse_csv_rationals(text: str, option: str) -> tuple[Rational, ...]:
    try:
        return tuple(parse_rational(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"option {option}: {exc}") from None


def cmd_degree(args: argparse.Namespace) -> int:
    problem_file = load_problem_file(args.input)
    problem = problem_file.to_problem()
    detection = detect_degree(problem, args.mode)
    interpolant = interpolate_direct(problem)
    centered = poly_shift_scale(interpolant, problem.xi, 1)

    out = sys.stdout
    print(f"input: {args.input}", file=out)
    print(f"ell: {problem.ell}", file=out)
    print(f"xi: {format_rational(problem.xi)}", file=out)
    print(f"h: {format_rational(problem.h)}", file=out)
    print(f"values: {', '.join(format_rational(v) for v in problem.a)}", file=out)
    print(f"mode: {args.mode}", file=out)
    print(f"degree: {degree_to_str(detection.degree)}", file=out)
    print(f"witness_m: {'none' if detection.witness_m is None else detection.witness_m}", file=out)
    for s, value in enumerate(detection.determinants):
        print(f"det[{s}]: {format_rational(value)}", file=out)
    for k in range(problem.ell + 1):
        print(f"b[{k}]: {format_rational(centered.coefficient(k))}", file=out)
    return 0


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env_value = os.environ.get(ENV_SEED)
    if env_value is not None:
        try:
            return int(env_value)
        except ValueError:
            raise ValueError(f"environment variable {ENV_SEED} is not an integer: {env_value!r}") from None
    return DEFAULT_SEED


def cmd_verify(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    if args.suite == "all":
        reports = run_all(args.max_ell, args.trials, seed)
    else:
        reports = [run_suite(args.suite, args.max_ell, args.trials, seed)]

    if args.json:
        document = {
            "reports": [r.to_dict() for r in reports],
            "summary": {
                "suites_run": len(reports),
                "suites_passed": sum(1 for r in reports if r.passed),
                "status": "PASS" if all(r.passed for r in reports) else "FAIL",
            },
        }
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for index, report in enumerate(reports):
            if index:
                print()
            for line in report.to_lines():
                print(line)
        if len(reports) > 1:
            print()
            print("summary: all")
            print(f"suites_run: {len(reports)}")
            print(f"suites_passed: {sum(1 for r in reports if r.passed)}")
            print(f"status: {'PASS' if all(r.passed for r in reports) else 'FAIL'}")
    for report in reports:
        print(f"# elapsed[{report.suite}]: {report.elapsed_ms} ms", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def _require(args: argparse.Namespace, names: list[str], kind: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"matrix kind {kind!r} needs {', '.join(missing)}")


def cmd_det(args: argparse.Namespace) -> int:
    lines = [f"matrix: {args.matrix}"]
    closed_form: Rational | None = None
    closed_form_note = None

    if args.matrix == "A":
        _require(args, ["ell", "s", "a"], "A")
        a = _parse_csv_rationals(args.a, "--a")
        spec = DegreeMatrixSpec(args.ell, args.s, a)
        direct = det_fraction_free(build_A(spec))
        closed_form = det_A_closed_form(spec)
        lines += [f"ell: {args.ell}", f"s: {args.s}", f"a: {', '.join(map(format_rational, a))}"]
    elif args.matrix == "Asub":
        _require(args, ["ell", "kappa"], "Asub")
        direct = det_fraction_free(build_A_sub(args.ell, args.kappa))
        closed_form = Rational(det_A_sub_closed_form(args.ell, args.kappa))
        lines += [f"ell: {args.ell}", f"kappa: {args.kappa}"]
    else:
        _require(args, ["k", "ell", "alpha", "beta", "r"], "B")
        alpha = _parse_csv_rationals(args.alpha, "--alpha")
        beta = _parse_csv_rationals(args.beta, "--beta")
        r = _parse_csv_rationals(args.r, "--r")
        data = AffineData(args.k, args.ell, alpha, beta, r)
        direct = det_fraction_free(build_B(data))
        lines += [
            f"k: {args.k}",
            f"ell: {args.ell}",
            f"alpha: {', '.join(map(format_rational, alpha))}",
            f"beta: {', '.join(map(format_rational, beta))}",
            f"r: {', '.join(map(format_rational, r))}",
        ]
        if args.k > args.ell:
            closed_form = Rational(0)
        elif all(x != 0 for x in alpha):
            closed_form = det_B_expansion(data)
        else:
            closed_form_note = "n/a (expansion needs every alpha_i nonzero)"

    lines.append(f"det_direct: {format_rational(direct)}")
    if closed_form is not None:
        lines.append(f"det_closed_form: {format_rational(closed_form)}")
        lines.append(f"agree: {'true' if closed_form == direct else 'false'}")
    else:
        lines.append(f"det_closed_form: {closed_form_note}")
        lines.append("agree: n/a")
    print("\n".join(lines))
    return 0 if closed_form is None or closed_form == direct else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degdet",
        description="Exact degree detection for equidistant interpolation data, "
        "plus verification sweeps for the underlying determinant identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_degree = sub.add_parser("degree", help="detect the interpolant degree for a problem file")
    p_degree.add_argument("--input", required=True, help="problem file (fields: ell, xi, h, values)")
    p_degree.add_argument("--mode", choices=DETECTION_MODES, default=MODE_CLOSED_FORM,
                          help="determinant route: closed-form sums or explicit matrices")
    p_degree.set_defaults(func=cmd_degree)

    suite_help = "; ".join(f"{name}: {spec.summary}" for name, spec in SUITES.items())
    p_verify = sub.add_parser("verify", help="run an identity-verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITE_NAMES, help=suite_help)
    p_verify.add_argument("--max-ell", type=int, default=None, help="override the suite's grid-size ceiling")
    p_verify.add_argument("--trials", type=int, default=None, help="override the per-cell random trial count")
    p_verify.add_argument("--seed", type=int, default=None,
                          help=f"seed for the trial stream (default: ${ENV_SEED} or {DEFAULT_SEED})")
    p_verify.add_argument("--json", action="store_true", help="emit one JSON document instead of key: value lines")
    p_verify.set_defaults(func=cmd_verify)

    p_det = sub.add_parser("det", help="print one exact determinant (direct and closed form)")
    p_det.add_argument("--matrix", required=True, choices=["A", "Asub", "B"])
    p_det.add_argument("--ell", type=int)
    p_det.add_argument("--s", type=int)
    p_det.add_argument("--a", help="comma-separated rational values (matrix A)")
    p_det.add_argument("--kappa", type=int, help="removed column, 1-based (matrix Asub)")
    p_det.add_argument("--k", type=int, help="matrix size (matrix B)")
    p_det.add_argument("--alpha", help="comma-separated rationals (matrix B)")
    p_det.add_argument("--beta", help="comma-separated rationals (matrix B)")
    p_det.add_argument("--r", help="comma-separated rationals, pairwise distinct (matrix B)")
    p_det.set_defaults(func=cmd_det)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProblemFileError, ValueError) as exc:
        print(f"degdet: error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
