"""Named verification suites.

Each suite replays one family of exact identities over seeded random data
(or exhaustively, where the domain is finite) and returns a VerifyReport.
Reports are fully deterministic for a fixed (seed, max_ell, trials): the
only randomness is the SplitMix64 stream, and cases are generated and
recorded in a fixed order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .combinat import tau, tau_via_recurrence
from .degreematrix import (
    DegreeMatrixSpec,
    build_A,
    build_A_sub,
    det_A_closed_form,
    det_A_sub_closed_form,
)
from .exactnum import (
    NEG_INF,
    Degree,
    NegativeInfinity,
    Poly,
    Rational,
    degree_to_str,
    det_fraction_free,
    format_rational,
    poly_shift_scale,
)
from .interp import (
    EquidistantProblem,
    GeneralProblem,
    K_quotient_via_tau,
    compare_general_expansion,
    derivative_at_left_node,
    detect_degree_via_determinants,
    interpolate_direct,
    interpolate_eq14,
    poly_K,
)
from .rng import SplitMix64
from .vandermonde import (
    AffineData,
    build_B,
    det_B_expansion,
    det_B_expansion_complement,
    det_B_zero_check,
    regularity_check,
)

DEFAULT_SEED = 42


@dataclass
class CaseFailure:
    inputs: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    suite: str
    seed: int
    max_ell: int
    trials: int
    cases_run: int
    cases_passed: int
    failures: list[CaseFailure]
    notes: list[str]
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_lines(self) -> list[str]:
        """Line-oriented serialization; deliberately excludes elapsed_ms so
        that output bytes are stable across runs with identical inputs."""
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}",
            f"max_ell: {self.max_ell}",
            f"trials: {self.trials}",
            f"cases_run: {self.cases_run}",
            f"cases_passed: {self.cases_passed}",
            f"failures: {len(self.failures)}",
        ]
        for i, note in enumerate(self.notes):
            lines.append(f"note[{i}]: {note}")
        for i, failure in enumerate(self.failures):
            lines.append(f"failure[{i}].inputs: {failure.inputs}")
            lines.append(f"failure[{i}].expected: {failure.expected}")
            lines.append(f"failure[{i}].actual: {failure.actual}")
        lines.append(f"status: {'PASS' if self.passed else 'FAIL'}")
        return lines

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "max_ell": self.max_ell,
            "trials": self.trials,
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "notes": list(self.notes),
            "failures": [
                {"inputs": f.inputs, "expected": f.expected, "actual": f.actual} for f in self.failures
            ],
            "status": "PASS" if self.passed else "FAIL",
        }


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, NegativeInfinity):
        return degree_to_str(value)
    if isinstance(value, Poly):
        return ",".join(format_rational(c) for c in value.coeffs) if value.coeffs else "0"
    if isinstance(value, (tuple, list)):
        return ",".join(_fmt(v) for v in value)
    raise TypeError(f"no stable formatting for {type(value).__name__}")


def _csv(values) -> str:
    return ",".join(format_rational(v) for v in values)


@dataclass
class _Run:
    cases_run: int = 0
    cases_passed: int = 0
    failures: list[CaseFailure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def case(self, inputs: str, expected, actual) -> None:
        self.cases_run += 1
        if expected == actual:
            self.cases_passed += 1
        else:
            self.failures.append(CaseFailure(inputs, _fmt(expected), _fmt(actual)))

    def note(self, text: str) -> None:
        self.notes.append(text)


def _random_vector(rng: SplitMix64, count: int) -> tuple[Rational, ...]:
    return tuple(rng.rational() for _ in range(count))


def _random_problem(rng: SplitMix64, ell: int) -> EquidistantProblem:
    return EquidistantProblem(ell, rng.rational(), rng.nonzero_rational(), _random_vector(rng, ell + 1))


def _random_exact_degree_poly(rng: SplitMix64, degree: Degree) -> Poly:
    if isinstance(degree, NegativeInfinity):
        return Poly.zero()
    return Poly([rng.rational() for _ in range(degree)] + [rng.nonzero_rational()])


def _random_affine(rng: SplitMix64, k: int, ell: int, nonzero_alpha: bool, nonzero_beta: bool) -> AffineData:
    alpha = [rng.nonzero_rational() if nonzero_alpha else rng.rational() for _ in range(k)]
    beta = [rng.nonzero_rational() if nonzero_beta else rng.rational() for _ in range(k)]
    return AffineData(k, ell, alpha, beta, rng.distinct_rationals(k))


def _random_regular_data(rng: SplitMix64, k: int, ell: int) -> AffineData:
    """Data satisfying the regularity hypotheses: each ratio alpha_i/beta_i
    positive, ratios pairwise distinct (so all cross products are nonzero),
    r positive and injective."""
    alpha: list[Rational] = []
    beta: list[Rational] = []
    ratios: list[Rational] = []
    while len(alpha) < k:
        sign = 1 if rng.int_between(0, 1) == 0 else -1
        a = sign * rng.positive_rational()
        b = sign * rng.positive_rational()
        if a / b in ratios:
            continue
        alpha.append(a)
        beta.append(b)
        ratios.append(a / b)
    return AffineData(k, ell, alpha, beta, rng.distinct_positive_rationals(k))


def _suite_prop3(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for ell in range(1, max_ell + 1):
        for kappa in range(1, ell + 2):
            run.case(
                f"ell={ell} kappa={kappa}",
                det_fraction_free(build_A_sub(ell, kappa)),
                Fraction(det_A_sub_closed_form(ell, kappa)),
            )


def _suite_prop2(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for ell in range(1, max_ell + 1):
        for s in range(ell + 1):
            for trial in range(trials):
                a = _random_vector(rng, ell + 1)
                spec = DegreeMatrixSpec(ell, s, a)
                run.case(
                    f"ell={ell} s={s} trial={trial} a={_csv(a)}",
                    det_fraction_free(build_A(spec)),
                    det_A_closed_form(spec),
                )


def _suite_prop6(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for ell in range(1, max_ell + 1):
        nodal = poly_K(ell)
        for j in range(ell + 1):
            rebuilt = K_quotient_via_tau(ell, j) * Poly.linear_root(j)
            run.case(f"quotient ell={ell} j={j}", nodal, rebuilt)
        for m in range(ell):
            for j in range(1, ell + 1):
                run.case(
                    f"recurrence ell={ell} m={m} j={j}",
                    tau(ell, m, j),
                    tau_via_recurrence(ell, m, j),
                )


def _suite_eq5(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    run.note("regime: alpha nonzero, beta unconstrained")
    for ell in range(1, max_ell + 1):
        for k in range(1, ell + 1):
            for trial in range(trials):
                data = _random_affine(rng, k, ell, nonzero_alpha=True, nonzero_beta=False)
                run.case(
                    f"k={k} ell={ell} trial={trial} alpha={_csv(data.alpha)}"
                    f" beta={_csv(data.beta)} r={_csv(data.r)}",
                    det_fraction_free(build_B(data)),
                    det_B_expansion(data),
                )
    zero_trials = max(1, trials // 10)
    for ell in range(1, max_ell + 1):
        for k in range(ell + 1, max_ell + 2):
            for trial in range(zero_trials):
                data = _random_affine(rng, k, ell, nonzero_alpha=False, nonzero_beta=False)
                run.case(
                    f"zero-band k={k} ell={ell} trial={trial} alpha={_csv(data.alpha)}"
                    f" beta={_csv(data.beta)} r={_csv(data.r)}",
                    True,
                    det_B_zero_check(data),
                )


def _suite_eq5c(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    run.note("regime: alpha nonzero, beta nonzero")
    for ell in range(1, max_ell + 1):
        for k in range(1, ell + 1):
            for trial in range(trials):
                data = _random_affine(rng, k, ell, nonzero_alpha=True, nonzero_beta=True)
                run.case(
                    f"k={k} ell={ell} trial={trial} alpha={_csv(data.alpha)}"
                    f" beta={_csv(data.beta)} r={_csv(data.r)}",
                    det_fraction_free(build_B(data)),
                    det_B_expansion_complement(data),
                )


def _suite_eq10(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for ell in range(1, max_ell + 1):
        for s in range(ell + 1):
            for trial in range(trials):
                problem = _random_problem(rng, ell)
                oracle = interpolate_direct(problem).derivative(ell - s)(problem.xi)
                run.case(
                    f"ell={ell} s={s} trial={trial} xi={format_rational(problem.xi)}"
                    f" h={format_rational(problem.h)} a={_csv(problem.a)}",
                    oracle,
                    derivative_at_left_node(problem, s),
                )


def _suite_eq14(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for ell in range(1, max_ell + 1):
        for trial in range(trials):
            problem = _random_problem(rng, ell)
            shifted = poly_shift_scale(interpolate_direct(problem), problem.xi, problem.h)
            run.case(
                f"ell={ell} trial={trial} xi={format_rational(problem.xi)}"
                f" h={format_rational(problem.h)} a={_csv(problem.a)}",
                shifted,
                interpolate_eq14(problem),
            )


def _suite_theorem1(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for ell in range(1, max_ell + 1):
        targets: list[Degree] = [NEG_INF, *range(ell + 1)]
        for target in targets:
            for trial in range(trials):
                poly = _random_exact_degree_poly(rng, target)
                xi = rng.rational()
                h = rng.nonzero_rational()
                problem = EquidistantProblem(ell, xi, h, [poly(xi + i * h) for i in range(ell + 1)])
                run.case(
                    f"constructed-degree ell={ell} target={degree_to_str(target)} trial={trial}"
                    f" xi={format_rational(xi)} h={format_rational(h)} a={_csv(problem.a)}",
                    target,
                    detect_degree_via_determinants(problem),
                )
    converse_trials = 20 * trials
    for ell in range(1, max_ell + 1):
        for trial in range(converse_trials):
            problem = _random_problem(rng, ell)
            run.case(
                f"detector-vs-interpolant ell={ell} trial={trial} a={_csv(problem.a)}",
                interpolate_direct(problem).degree,
                detect_degree_via_determinants(problem),
            )


def _suite_theorem4(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    for k in range(1, max_ell + 1):
        for ell in range(1, max_ell + 1):
            for trial in range(trials):
                data = _random_regular_data(rng, k, ell)
                run.case(
                    f"k={k} ell={ell} trial={trial} alpha={_csv(data.alpha)}"
                    f" beta={_csv(data.beta)} r={_csv(data.r)}",
                    k <= ell,
                    regularity_check(data),
                )


def _suite_remark5(run: _Run, rng: SplitMix64, max_ell: int, trials: int) -> None:
    """Informational: the verbatim general-base-point expansion is compared
    against the Lagrange oracle and every outcome is emitted as a note
    (match, exact constant ratio, or exact difference polynomial).  A case
    only fails if the comparison record is internally inconsistent."""
    for ell in range(1, max_ell + 1):
        grids: list[tuple[Rational, ...]] = [tuple(Fraction(i) for i in range(ell + 1))]
        for _ in range(trials):
            grids.append(rng.distinct_rationals(ell + 1))
        for grid_index, nodes in enumerate(grids):
            a = _random_vector(rng, ell + 1)
            problem = GeneralProblem(nodes, a)
            comparison = compare_general_expansion(problem)
            inputs = f"ell={ell} grid={grid_index} nodes={_csv(nodes)} a={_csv(a)}"
            run.note(f"{inputs} outcome={comparison.outcome}")
            run.case(inputs, comparison.formula, comparison.oracle + comparison.difference)
            if comparison.ratio is not None:
                run.case(f"{inputs} ratio-consistency", comparison.formula, comparison.oracle * comparison.ratio)


@dataclass(frozen=True)
class _SuiteSpec:
    fn: Callable[[_Run, SplitMix64, int, int], None]
    max_ell: int
    trials: int
    summary: str


SUITES: dict[str, _SuiteSpec] = {
    "prop2": _SuiteSpec(_suite_prop2, 6, 100, "closed-form determinant vs fraction-free elimination on random value vectors"),
    "prop3": _SuiteSpec(_suite_prop3, 7, 1, "closed-form minor determinants vs direct evaluation, exhaustive"),
    "prop6": _SuiteSpec(_suite_prop6, 8, 1, "nodal-polynomial quotient and symmetric-sum recurrence, exhaustive"),
    "eq5": _SuiteSpec(_suite_eq5, 5, 50, "power-matrix determinant expansion vs direct determinant, plus the k > ell zero band"),
    "eq5c": _SuiteSpec(_suite_eq5c, 5, 50, "complementary-index determinant expansion vs direct determinant"),
    "eq10": _SuiteSpec(_suite_eq10, 6, 50, "closed-form derivative at the left node vs symbolic differentiation"),
    "eq14": _SuiteSpec(_suite_eq14, 6, 100, "normalized coefficient formula vs shifted direct interpolant"),
    "theorem1": _SuiteSpec(_suite_theorem1, 6, 25, "degree detector on constructed-degree inputs and against the direct interpolant"),
    "theorem4": _SuiteSpec(_suite_theorem4, 5, 200, "regularity (det nonzero iff k <= ell) under the stated hypotheses"),
    "remark5": _SuiteSpec(_suite_remark5, 4, 5, "general-base-point expansion vs Lagrange oracle (informational)"),
}

SUITE_NAMES = [*SUITES, "all"]


def run_suite(name: str, max_ell: int | None = None, trials: int | None = None, seed: int = DEFAULT_SEED) -> VerifyReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(SUITE_NAMES)}")
    spec = SUITES[name]
    effective_max_ell = spec.max_ell if max_ell is None else max_ell
    effective_trials = spec.trials if trials is None else trials
    if effective_max_ell < 1:
        raise ValueError(f"max_ell must be >= 1, got {effective_max_ell}")
    if effective_trials < 1:
        raise ValueError(f"trials must be >= 1, got {effective_trials}")
    run = _Run()
    rng = SplitMix64(seed)
    started = time.perf_counter()
    spec.fn(run, rng, effective_max_ell, effective_trials)
    elapsed_ms = int(round((time.perf_counter() - started) * 1000))
    return VerifyReport(
        suite=name,
        seed=seed,
        max_ell=effective_max_ell,
        trials=effective_trials,
        cases_run=run.cases_run,
        cases_passed=run.cases_passed,
        failures=run.failures,
        notes=run.notes,
        elapsed_ms=elapsed_ms,
    )


def run_all(max_ell: int | None = None, trials: int | None = None, seed: int = DEFAULT_SEED) -> list[VerifyReport]:
    """Run every suite in registry order; None parameters keep per-suite defaults."""
    return [run_suite(name, max_ell, trials, seed) for name in SUITES]
