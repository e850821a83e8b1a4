"""The degree-detection matrix family: the (ell+1)x(ell+1) matrix whose first
ell rows are consecutive integer powers and whose last row carries the weighted
value vector, its square submatrices, and their closed-form determinants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial
from .exactnum import ExactMatrix, Rational, RationalLike, rat


@dataclass(frozen=True)
class DegreeMatrixSpec:
    """Parameters (ell, s, a) of one determinant instance.

    a has exactly ell+1 entries; s is any nonnegative integer (values above
    ell are legal, the alternating sum is still well defined).
    """

    ell: int
    s: int
    a: tuple[Rational, ...]

    def __init__(self, ell: int, s: int, a):
        if ell < 1:
            raise ValueError(f"degree matrix needs ell >= 1, got {ell}")
        if s < 0:
            raise ValueError(f"degree matrix needs s >= 0, got {s}")
        values = tuple(rat(x) for x in a)
        if len(values) != ell + 1:
            raise ValueError(f"value vector must have ell+1 = {ell + 1} entries, got {len(values)}")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "a", values)


def build_A(spec: DegreeMatrixSpec) -> ExactMatrix:
    """The (ell+1)x(ell+1) matrix: row i in 1..ell holds the (ell-1)-th powers
    of the consecutive integers (i-1)(ell+1)+1 .. i(ell+1); the last row holds
    (j-1)^s * a_{j-1} with the 0^0 = 1 convention."""
    ell, s, a = spec.ell, spec.s, spec.a
    power = ell - 1
    rows: list[list[RationalLike]] = []
    for i in range(1, ell + 1):
        base = (i - 1) * (ell + 1)
        rows.append([(base + j) ** power for j in range(1, ell + 2)])
    rows.append([j**s * a[j] for j in range(ell + 1)])
    return ExactMatrix.from_rows(rows)


def build_A_sub(ell: int, kappa: int) -> ExactMatrix:
    """The ell x ell submatrix left after removing the last row and the
    kappa-th column; independent of s and a."""
    if ell < 1:
        raise ValueError(f"submatrix needs ell >= 1, got {ell}")
    if not 1 <= kappa <= ell + 1:
        raise ValueError(f"column index kappa={kappa} outside [1, {ell + 1}]")
    power = ell - 1
    rows = []
    for i in range(1, ell + 1):
        base = (i - 1) * (ell + 1)
        rows.append([(base + (j if j <= kappa - 1 else j + 1)) ** power for j in range(1, ell + 1)])
    return ExactMatrix.from_rows(rows)


def sub_column_offsets(ell: int, kappa: int) -> tuple[int, ...]:
    """The column labels 1..ell+1 with kappa skipped (the surviving offsets)."""
    if not 1 <= kappa <= ell + 1:
        raise ValueError(f"column index kappa={kappa} outside [1, {ell + 1}]")
    return tuple(j if j <= kappa - 1 else j + 1 for j in range(1, ell + 1))


def sigma_ell(ell: int) -> int:
    """The size-only constant carried by every determinant in this family:

        (-1)^(ell(ell+1)/2) * (ell+1)^(ell(ell-1)/2)
          * prod_{j=0}^{ell-1} C(ell-1, j) * prod_{j=1}^{ell-1} (j!)^2
    """
    if ell < 1:
        raise ValueError(f"sigma_ell needs ell >= 1, got {ell}")
    sign = -1 if (ell * (ell + 1) // 2) % 2 else 1
    value = sign * (ell + 1) ** (ell * (ell - 1) // 2)
    for j in range(ell):
        value *= binomial(ell - 1, j)
    for j in range(1, ell):
        value *= math.factorial(j) ** 2
    return value


def det_A_sub_closed_form(ell: int, kappa: int) -> int:
    """Closed form (-1)^ell * sigma_ell * C(ell, kappa-1) for the submatrix
    determinant."""
    if not 1 <= kappa <= ell + 1:
        raise ValueError(f"column index kappa={kappa} outside [1, {ell + 1}]")
    return (-1) ** ell * sigma_ell(ell) * binomial(ell, kappa - 1)


def alternating_weighted_sum(ell: int, s: int, a) -> Rational:
    """The combinatorial core sum_{j=0}^{ell} (-1)^j C(ell, j) j^s a_j,
    with 0^0 = 1.  At s = 0 this is (-1)^ell times the ell-th forward
    difference of a."""
    if ell < 1:
        raise ValueError(f"alternating sum needs ell >= 1, got {ell}")
    if s < 0:
        raise ValueError(f"alternating sum needs s >= 0, got {s}")
    values = [rat(x) for x in a]
    if len(values) != ell + 1:
        raise ValueError(f"value vector must have ell+1 = {ell + 1} entries, got {len(values)}")
    total = Fraction(0)
    for j, aj in enumerate(values):
        term = binomial(ell, j) * j**s * aj
        total += -term if j % 2 else term
    return total


def det_A_closed_form(spec: DegreeMatrixSpec) -> Rational:
    """Closed-form determinant sigma_ell * alternating_weighted_sum(ell, s, a)."""
    return sigma_ell(spec.ell) * alternating_weighted_sum(spec.ell, spec.s, spec.a)
