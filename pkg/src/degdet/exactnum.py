"""Exact scalar, polynomial, and matrix arithmetic.

Everything is built on arbitrary-precision rationals (fractions.Fraction);
no floating point enters any code path.  All values are immutable, all
operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Rational:
    """Coerce an int, "p/q" string, or Fraction to an exact rational.

    Floats are rejected: they would smuggle binary rounding into paths
    whose whole point is exact equality.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot build an exact rational from {type(value).__name__}: {value!r}")


def parse_rational(text: str) -> Rational:
    """Parse "p" or "p/q" (q > 0 after reduction); anything else is an error."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    num_part, sep, den_part = body.partition("/")
    if not num_part.isdigit() or (sep and not den_part.isdigit()):
        raise ValueError(f"not a rational literal (expected 'p' or 'p/q'): {text!r}")
    if sep and int(den_part) == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(s)


def format_rational(value: Rational) -> str:
    """Serialize exactly: "p" for integers, "p/q" otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class NegativeInfinity:
    """Sentinel for the degree of the zero polynomial.

    Distinct from every integer, smaller than all of them, and never
    valid in arithmetic.  There is a single shared instance, NEG_INF.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        if isinstance(other, int) or other is self:
            return other is not self
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int) or other is self:
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int) or other is self:
            return other is self
        return NotImplemented

    def __repr__(self):
        return "-inf"


NEG_INF = NegativeInfinity()

Degree = Union[int, NegativeInfinity]


def degree_to_str(degree: Degree) -> str:
    return "-inf" if isinstance(degree, NegativeInfinity) else str(degree)


def parse_degree(text: str) -> Degree:
    s = text.strip()
    return NEG_INF if s == "-inf" else int(s)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over exact rationals.

    coeffs[k] multiplies t**k; trailing zeros are never stored, so the
    zero polynomial has an empty coefficient tuple and degree NEG_INF.
    """

    coeffs: tuple[Rational, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        items = [rat(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def constant(c: RationalLike) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(power: int, coeff: RationalLike = 1) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return Poly([0] * power + [coeff])

    @staticmethod
    def linear_root(root: RationalLike) -> "Poly":
        """The monic linear factor t - root."""
        return Poly([-rat(root), 1])

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Rational:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Rational:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Rational:
        point = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __add__(self, other):
        if isinstance(other, (Fraction, int, str)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (Fraction, int, str)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Fraction, int, str)):
            scalar = rat(other)
            return Poly([c * scalar for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        acc = Poly.constant(1)
        for _ in range(n):
            acc = acc * self
        return acc

    def derivative(self, n: int = 1) -> "Poly":
        if n < 0:
            raise ValueError("derivative order must be nonnegative")
        coeffs = self.coeffs
        for _ in range(n):
            coeffs = tuple(k * c for k, c in enumerate(coeffs))[1:]
            if not coeffs:
                break
        return Poly(coeffs)

    def compose_affine(self, xi: RationalLike, h: RationalLike) -> "Poly":
        """Substitute the argument by xi + t*h, exactly."""
        line = Poly([xi, h])
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * line + c
        return acc

    def divide_linear(self, root: RationalLike) -> "Poly":
        """Exact synthetic division by (t - root); root must actually be a root."""
        r = rat(root)
        if self.is_zero:
            return Poly.zero()
        quotient = [Fraction(0)] * (len(self.coeffs) - 1)
        carry = Fraction(0)
        for k in range(len(self.coeffs) - 1, 0, -1):
            carry = self.coeffs[k] + r * carry
            quotient[k - 1] = carry
        remainder = self.coeffs[0] + r * carry
        if remainder != 0:
            raise ValueError(
                f"{format_rational(r)} is not a root (remainder {format_rational(remainder)}); "
                "exact division is impossible"
            )
        return Poly(quotient)

    def to_string(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                factor = "" if mag == 1 else f"{format_rational(mag)}*"
                body = f"{factor}{var}" + (f"^{k}" if k > 1 else "")
            parts.append(f"{sign} {body}" if parts else (f"-{body}" if sign == "-" else body))
        return " ".join(parts)

    def __str__(self):
        return self.to_string()


def poly_derivative(p: Poly, n: int) -> Poly:
    """n-th exact derivative; the degree drops by exactly n while n <= deg p."""
    return p.derivative(n)


def poly_shift_scale(p: Poly, xi: RationalLike, h: RationalLike) -> Poly:
    """Return p̂ with p̂(t) = p(xi + t*h); h must be nonzero so the substitution inverts."""
    step = rat(h)
    if step == 0:
        raise ValueError("shift-scale substitution needs h != 0")
    return p.compose_affine(xi, step)


def poly_divide_linear(p: Poly, root: RationalLike) -> Poly:
    """Exact quotient q with p = (t - root) * q; errors when root is not a root of p."""
    return p.divide_linear(root)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix over exact rationals, stored row-major and immutable."""

    rows: int
    cols: int
    entries: tuple[Rational, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        items = tuple(rat(e) for e in entries)
        if len(items) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(items)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", items)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[RationalLike]]) -> "ExactMatrix":
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("all rows must have the same length")
        flat = [e for r in rows for e in r]
        return ExactMatrix(len(rows), width, flat)

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Rational:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Rational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Rational]]:
        return [list(self.row(i)) for i in range(self.rows)]


def det_fraction_free(m: ExactMatrix) -> Rational:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first scaled to integers by the lcm of its denominators;
    the Bareiss recurrence then keeps every intermediate value an exact
    integer (the divisions are exact), which controls coefficient swell.
    The single rational division happens once at the very end.
    """
    if not m.is_square:
        raise ValueError(f"determinant requires a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    scale = 1
    rows: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        d = math.lcm(*(e.denominator for e in row))
        scale *= d
        rows.append([int(e * d) for e in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            head = rows[i][k]
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - head * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


def det_cofactor(m: ExactMatrix) -> Rational:
    """Determinant by first-row cofactor expansion.

    Factorial cost; kept as the independent small-size oracle for
    det_fraction_free, not for production use.
    """
    if not m.is_square:
        raise ValueError(f"determinant requires a square matrix, got {m.rows}x{m.cols}")
    grid = m.to_rows()

    def expand(rows: list[list[Rational]]) -> Rational:
        size = len(rows)
        if size == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, top in enumerate(rows[0]):
            if top == 0:
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = top * expand(minor)
            total += term if j % 2 == 0 else -term
        return total

    return expand(grid)
