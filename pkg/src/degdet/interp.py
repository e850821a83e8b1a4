"""Interpolation machinery: exact Lagrange construction, the nodal polynomial
with its symmetric-sum expansions, closed-form derivatives at the left node,
the determinant-based degree detector, and the general-base-point expansion
with its structured comparison against the Lagrange oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import binomial, tau
from .degreematrix import DegreeMatrixSpec, alternating_weighted_sum, build_A, sigma_ell
from .exactnum import (
    NEG_INF,
    Degree,
    Poly,
    Rational,
    RationalLike,
    det_fraction_free,
    format_rational,
    rat,
)

MODE_CLOSED_FORM = "closed-form"
MODE_MATRIX = "matrix"
DETECTION_MODES = (MODE_CLOSED_FORM, MODE_MATRIX)


@dataclass(frozen=True)
class EquidistantProblem:
    """One interpolation instance on the grid x_i = xi + i*h, i = 0..ell."""

    ell: int
    xi: Rational
    h: Rational
    a: tuple[Rational, ...]

    def __init__(self, ell: int, xi: RationalLike, h: RationalLike, a):
        if ell < 1:
            raise ValueError(f"problem needs ell >= 1, got {ell}")
        step = rat(h)
        if step == 0:
            raise ValueError("problem needs a nonzero step h")
        values = tuple(rat(x) for x in a)
        if len(values) != ell + 1:
            raise ValueError(f"value vector must have ell+1 = {ell + 1} entries, got {len(values)}")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "xi", rat(xi))
        object.__setattr__(self, "h", step)
        object.__setattr__(self, "a", values)

    def nodes(self) -> tuple[Rational, ...]:
        return tuple(self.xi + i * self.h for i in range(self.ell + 1))


@dataclass(frozen=True)
class GeneralProblem:
    """An interpolation instance on arbitrary pairwise-distinct nodes."""

    nodes: tuple[Rational, ...]
    a: tuple[Rational, ...]

    def __init__(self, nodes, a):
        node_t = tuple(rat(x) for x in nodes)
        values = tuple(rat(x) for x in a)
        if len(node_t) < 2:
            raise ValueError("general problem needs at least two nodes")
        if len(set(node_t)) != len(node_t):
            raise ValueError(f"nodes must be pairwise distinct, got {tuple(map(format_rational, node_t))}")
        if len(values) != len(node_t):
            raise ValueError(f"need one value per node: {len(values)} values for {len(node_t)} nodes")
        object.__setattr__(self, "nodes", node_t)
        object.__setattr__(self, "a", values)

    @property
    def ell(self) -> int:
        return len(self.nodes) - 1


def poly_K(ell: int) -> Poly:
    """The monic nodal polynomial of degree ell+1 with roots exactly 0..ell."""
    if ell < 1:
        raise ValueError(f"nodal polynomial needs ell >= 1, got {ell}")
    return math.prod((Poly.linear_root(i) for i in range(ell + 1)), start=Poly.constant(1))


def K_quotient_via_tau(ell: int, j: int) -> Poly:
    """Closed form of the nodal polynomial divided by (t - j):

        sum_{m=0}^{ell} (-1)^m tau(ell, m, j) t^(ell-m)

    Must agree with exact synthetic division of poly_K(ell) by (t - j).
    """
    if not 0 <= j <= ell:
        raise ValueError(f"root index j={j} outside [0, {ell}]")
    coeffs = [Fraction(0)] * (ell + 1)
    for m in range(ell + 1):
        value = tau(ell, m, j)
        coeffs[ell - m] = Fraction(-value if m % 2 else value)
    return Poly(coeffs)


def lagrange_basis_hat(ell: int, j: int) -> Poly:
    """The j-th cardinal basis polynomial on the integer grid 0..ell:
    degree ell, value 1 at t = j and 0 at the other grid integers."""
    if not 0 <= j <= ell:
        raise ValueError(f"basis index j={j} outside [0, {ell}]")
    quotient = poly_K(ell).divide_linear(j)
    sign = -1 if (ell - j) % 2 else 1
    return quotient * Fraction(sign * binomial(ell, j), math.factorial(ell))


def lagrange_interpolate(nodes: Sequence[RationalLike], values: Sequence[RationalLike]) -> Poly:
    """Unique polynomial of degree <= len(nodes)-1 through the given points,
    built directly from the Lagrange basis with exact arithmetic."""
    points = [rat(x) for x in nodes]
    data = [rat(v) for v in values]
    if len(points) != len(data):
        raise ValueError("need one value per node")
    total = Poly.zero()
    for j, (xj, vj) in enumerate(zip(points, data)):
        if vj == 0:
            continue
        numer = Poly.constant(1)
        denom = Fraction(1)
        for i, xi in enumerate(points):
            if i == j:
                continue
            numer = numer * Poly.linear_root(xi)
            denom *= xj - xi
        total = total + numer * (vj / denom)
    return total


def interpolate_direct(problem: EquidistantProblem) -> Poly:
    """The interpolant in the x variable, q(xi + i*h) = a_i."""
    return lagrange_interpolate(problem.nodes(), problem.a)


def interpolate_eq14(problem: EquidistantProblem) -> Poly:
    """The interpolant in the normalized variable t = (x - xi)/h, assembled
    coefficient by coefficient from symmetric sums and alternating binomial
    sums of the values:

        (-1)^ell / ell! * sum_{m=0}^{ell} sum_{k=0}^{m}
            (-1)^(k+m) tau(ell, m-k, 0) S_k  t^(ell-m)

    where S_k is alternating_weighted_sum(ell, k, a).  Shifting the direct
    interpolant by (xi, h) reproduces this polynomial exactly.
    """
    ell = problem.ell
    sums = [alternating_weighted_sum(ell, k, problem.a) for k in range(ell + 1)]
    coeffs = [Fraction(0)] * (ell + 1)
    for m in range(ell + 1):
        acc = Fraction(0)
        for k in range(m + 1):
            term = tau(ell, m - k, 0) * sums[k]
            acc += -term if (k + m) % 2 else term
        coeffs[ell - m] = acc
    lead = Fraction((-1) ** ell, math.factorial(ell))
    return Poly(coeffs) * lead


def sigma_lsk(ell: int, s: int, k: int) -> Rational:
    """The closed-form derivative weights:

        (-1)^(ell-s+k) * (ell-s)! / ell! * tau(ell, s-k, 0)
    """
    if not 0 <= s <= ell:
        raise ValueError(f"derivative index s={s} outside [0, {ell}]")
    if not 0 <= k <= s:
        raise ValueError(f"weight index k={k} outside [0, {s}]")
    sign = -1 if (ell - s + k) % 2 else 1
    return Fraction(sign * math.factorial(ell - s), math.factorial(ell)) * tau(ell, s - k, 0)


def derivative_at_left_node(problem: EquidistantProblem, s: int) -> Rational:
    """The (ell-s)-th derivative of the interpolant at x = xi, via the closed
    form h^(s-ell) * sum_k sigma_lsk(ell, s, k) * S_k; must equal the symbolic
    derivative of the direct interpolant evaluated at xi."""
    ell = problem.ell
    if not 0 <= s <= ell:
        raise ValueError(f"derivative index s={s} outside [0, {ell}]")
    total = Fraction(0)
    for k in range(s + 1):
        total += sigma_lsk(ell, s, k) * alternating_weighted_sum(ell, k, problem.a)
    return problem.h ** (s - ell) * total


@dataclass(frozen=True)
class DegreeDetection:
    """Full detector output: the degree, the witness index m at which the
    determinant family first becomes nonzero (None when every determinant
    vanishes, i.e. the zero value vector), and the determinant values that
    were inspected, in order of s = 0, 1, ..."""

    degree: Degree
    witness_m: int | None
    determinants: tuple[Rational, ...]


def _determinant_for(problem: EquidistantProblem, s: int, mode: str) -> Rational:
    if mode == MODE_CLOSED_FORM:
        return sigma_ell(problem.ell) * alternating_weighted_sum(problem.ell, s, problem.a)
    if mode == MODE_MATRIX:
        return det_fraction_free(build_A(DegreeMatrixSpec(problem.ell, s, problem.a)))
    raise ValueError(f"unknown detection mode {mode!r}; choose one of {DETECTION_MODES}")


def detect_degree(problem: EquidistantProblem, mode: str = MODE_CLOSED_FORM) -> DegreeDetection:
    """Degree of the interpolant read off the determinant family: the degree
    is ell - m for the smallest m with a nonzero determinant.

    The closed-form mode evaluates each determinant as sigma_ell times an
    alternating binomial sum (O(ell) per step and independent of xi and h);
    the matrix mode rebuilds the full matrices and runs the fraction-free
    determinant as a cross-check.  The all-zero value vector makes every
    determinant vanish, so it short-circuits to the zero interpolant.
    """
    ell = problem.ell
    if all(x == 0 for x in problem.a):
        dets = tuple(_determinant_for(problem, s, mode) for s in range(ell + 1))
        return DegreeDetection(NEG_INF, None, dets)
    dets: list[Rational] = []
    for s in range(ell + 1):
        value = _determinant_for(problem, s, mode)
        dets.append(value)
        if value != 0:
            return DegreeDetection(ell - s, s, tuple(dets))
    raise AssertionError("unreachable: a nonzero value vector always yields a nonzero determinant")


def detect_degree_via_determinants(problem: EquidistantProblem, mode: str = MODE_CLOSED_FORM) -> Degree:
    return detect_degree(problem, mode).degree


def _elementary_symmetric(values: Sequence[Rational]) -> list[Rational]:
    """All elementary symmetric sums e_0..e_n of the given values."""
    sums = [Fraction(0)] * (len(values) + 1)
    sums[0] = Fraction(1)
    for top, v in enumerate(values, start=1):
        for m in range(top, 0, -1):
            sums[m] = sums[m] + v * sums[m - 1]
    return sums


def general_expansion(problem: GeneralProblem) -> Poly:
    """The general-base-point analogue of the normalized coefficient
    expansion, computed verbatim:

        sum_{m=0}^{ell} sum_{k=0}^{m} (-1)^(k+m) T_{m-k}
            (sum_j lambda_j x_j^k a_j) x^(ell-m)

    with lambda_j = 1 / prod_{i != j} (x_i - x_j) and T_m the elementary
    symmetric sums of the nodes x_1..x_ell (the leftmost node excluded, in
    analogy with the equidistant symbols that never involve the value 0).

    The formula is implemented exactly as stated and NOT adjusted; use
    compare_general_expansion to see how it relates to the Lagrange oracle.
    """
    xs = problem.nodes
    ell = problem.ell
    lam = []
    for j, xj in enumerate(xs):
        denom = math.prod((xi - xj for i, xi in enumerate(xs) if i != j), start=Fraction(1))
        lam.append(1 / denom)
    sym = _elementary_symmetric(xs[1:])
    inner = [
        sum((lam[j] * xs[j] ** k * problem.a[j] for j in range(ell + 1)), start=Fraction(0))
        for k in range(ell + 1)
    ]
    coeffs = [Fraction(0)] * (ell + 1)
    for m in range(ell + 1):
        acc = Fraction(0)
        for k in range(m + 1):
            term = sym[m - k] * inner[k]
            acc += -term if (k + m) % 2 else term
        coeffs[ell - m] = acc
    return Poly(coeffs)


@dataclass(frozen=True)
class GeneralExpansionComparison:
    """Structured comparison of the verbatim general expansion against the
    direct Lagrange interpolant: either they match, or they differ by an
    exact constant ratio, or only the exact difference polynomial is
    reported.  Nothing is corrected silently."""

    formula: Poly
    oracle: Poly
    match: bool
    ratio: Rational | None
    difference: Poly

    @property
    def outcome(self) -> str:
        if self.match:
            return "match"
        if self.ratio is not None:
            return f"proportional ratio={format_rational(self.ratio)}"
        inner = ",".join(format_rational(c) for c in self.difference.coeffs)
        return f"difference coeffs={inner}"


def compare_general_expansion(problem: GeneralProblem) -> GeneralExpansionComparison:
    formula = general_expansion(problem)
    oracle = lagrange_interpolate(problem.nodes, problem.a)
    if formula == oracle:
        ratio = Fraction(1) if not oracle.is_zero else None
        return GeneralExpansionComparison(formula, oracle, True, ratio, Poly.zero())
    ratio = None
    if not oracle.is_zero and formula.degree == oracle.degree:
        candidate = formula.leading_coefficient / oracle.leading_coefficient
        if formula == oracle * candidate:
            ratio = candidate
    return GeneralExpansionComparison(formula, oracle, False, ratio, formula - oracle)
