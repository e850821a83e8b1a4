"""Affine-power matrices, generalized Vandermonde determinants, Schur
quotients, and the expansion/regularity identities connecting them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import IndexSeq, binomial, enumerate_index_seqs
from .exactnum import ExactMatrix, Rational, RationalLike, det_fraction_free, format_rational, rat


class HypothesisViolation(ValueError):
    """A named hypothesis of the regularity statement failed on the given data."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(f"hypothesis '{hypothesis}' violated: {message}")
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class AffineData:
    """Input triple (alpha, beta, r) for a k x k matrix of (ell-1)-th powers
    of the affine combinations alpha_i + r_j beta_i.  r must be injective."""

    k: int
    ell: int
    alpha: tuple[Rational, ...]
    beta: tuple[Rational, ...]
    r: tuple[Rational, ...]

    def __init__(self, k: int, ell: int, alpha, beta, r):
        if k < 1:
            raise ValueError(f"affine data needs k >= 1, got {k}")
        if ell < 1:
            raise ValueError(f"affine data needs ell >= 1, got {ell}")
        alpha_t = tuple(rat(x) for x in alpha)
        beta_t = tuple(rat(x) for x in beta)
        r_t = tuple(rat(x) for x in r)
        for name, seq in (("alpha", alpha_t), ("beta", beta_t), ("r", r_t)):
            if len(seq) != k:
                raise ValueError(f"{name} must have k = {k} entries, got {len(seq)}")
        if len(set(r_t)) != k:
            raise ValueError(f"r must be injective, got {tuple(map(format_rational, r_t))}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "alpha", alpha_t)
        object.__setattr__(self, "beta", beta_t)
        object.__setattr__(self, "r", r_t)

    def rho(self) -> tuple[Rational, ...]:
        """The ratios beta_i / alpha_i; defined only when every alpha_i is nonzero."""
        if any(x == 0 for x in self.alpha):
            raise ValueError("rho needs every alpha_i nonzero")
        return tuple(b / a for a, b in zip(self.alpha, self.beta))

    def inverse_rho(self) -> tuple[Rational, ...]:
        """The ratios alpha_i / beta_i; defined only when every beta_i is nonzero."""
        if any(x == 0 for x in self.beta):
            raise ValueError("inverse rho needs every beta_i nonzero")
        return tuple(a / b for a, b in zip(self.alpha, self.beta))


def build_B(data: AffineData) -> ExactMatrix:
    """The k x k matrix with entries (alpha_i + r_j beta_i)^(ell-1); 0^0 = 1."""
    power = data.ell - 1
    rows = [[(a + rj * b) ** power for rj in data.r] for a, b in zip(data.alpha, data.beta)]
    return ExactMatrix.from_rows(rows)


def gen_vandermonde_det(nu: Sequence[RationalLike], mu: IndexSeq) -> Rational:
    """Determinant of the power matrix (nu_i ^ mu_j) for a strictly increasing
    exponent sequence mu; vanishes whenever two nu values coincide."""
    points = [rat(x) for x in nu]
    if len(points) != mu.k:
        raise ValueError(f"need as many points as exponents: {len(points)} vs {mu.k}")
    rows = [[p**e for e in mu.entries] for p in points]
    return det_fraction_free(ExactMatrix.from_rows(rows))


def vandermonde_product(nu: Sequence[RationalLike]) -> Rational:
    """The classical pairwise-difference product prod_{i<j} (nu_j - nu_i)."""
    points = [rat(x) for x in nu]
    return math.prod(
        (points[j] - points[i] for i in range(len(points)) for j in range(i + 1, len(points))),
        start=Fraction(1),
    )


def schur_eval(nu: Sequence[RationalLike], mu: IndexSeq) -> Rational:
    """The symmetric quotient gen_vandermonde_det(nu, mu) / vandermonde_product(nu),
    evaluated at pairwise distinct sample points."""
    points = [rat(x) for x in nu]
    if len(set(points)) != len(points):
        raise ValueError("Schur evaluation needs pairwise distinct points (0/0 otherwise)")
    return gen_vandermonde_det(points, mu) / vandermonde_product(points)


def det_B_expansion(data: AffineData) -> Rational:
    """Expansion of det(B) as a binomial-weighted sum over all C(ell, k)
    increasing exponent sequences:

        prod alpha_i^(ell-1) * sum_mu prod_j C(ell-1, mu_j)
            * V(r, mu) * V(rho, mu)

    Needs k <= ell and every alpha_i nonzero (rho must exist); beta is
    unconstrained.
    """
    if data.k > data.ell:
        raise ValueError("expansion needs k <= ell (the determinant is 0 for k > ell; see det_B_zero_check)")
    rho = data.rho()
    total = Fraction(0)
    for mu in enumerate_index_seqs(data.ell, data.k):
        weight = math.prod(binomial(data.ell - 1, e) for e in mu.entries)
        total += weight * gen_vandermonde_det(data.r, mu) * gen_vandermonde_det(rho, mu)
    lead = math.prod((a ** (data.ell - 1) for a in data.alpha), start=Fraction(1))
    return lead * total


def det_B_expansion_complement(data: AffineData) -> Rational:
    """Complementary-index expansion of det(B):

        (-1)^(k(k-1)/2) * prod beta_i^(ell-1) * sum_mu prod_j C(ell-1, mu_j)
            * V(r, mu) * V(1/rho, complement(mu))

    Needs k <= ell and every alpha_i and beta_i nonzero.
    """
    if data.k > data.ell:
        raise ValueError("expansion needs k <= ell (the determinant is 0 for k > ell; see det_B_zero_check)")
    if any(x == 0 for x in data.alpha):
        raise ValueError("complementary expansion needs every alpha_i nonzero")
    inv_rho = data.inverse_rho()
    total = Fraction(0)
    for mu in enumerate_index_seqs(data.ell, data.k):
        weight = math.prod(binomial(data.ell - 1, e) for e in mu.entries)
        total += weight * gen_vandermonde_det(data.r, mu) * gen_vandermonde_det(inv_rho, mu.complement())
    sign = -1 if (data.k * (data.k - 1) // 2) % 2 else 1
    lead = math.prod((b ** (data.ell - 1) for b in data.beta), start=Fraction(1))
    return sign * lead * total


def det_B_zero_check(data: AffineData) -> bool:
    """For k > ell the power matrix cannot have full rank; confirm det(B) = 0."""
    if data.k <= data.ell:
        raise ValueError("zero check applies only to k > ell")
    return det_fraction_free(build_B(data)) == 0


def regularity_check(data: AffineData) -> bool:
    """Decide det(B) != 0 under the regularity hypotheses, which are enforced
    strictly: every ratio alpha_i/beta_i positive, all cross products
    alpha_i beta_j - beta_i alpha_j nonzero for i != j, and r positive
    (injectivity is already a type invariant).  Under these hypotheses the
    result equals (k <= ell)."""
    for i, (a, b) in enumerate(zip(data.alpha, data.beta)):
        if b == 0 or a / b <= 0:
            raise HypothesisViolation(
                "ratio-positive",
                f"alpha_{i + 1}/beta_{i + 1} = {format_rational(a)}/{format_rational(b)} is not positive",
            )
    for i in range(data.k):
        for j in range(i + 1, data.k):
            if data.alpha[i] * data.beta[j] - data.beta[i] * data.alpha[j] == 0:
                raise HypothesisViolation(
                    "pairwise-independence",
                    f"alpha_{i + 1} beta_{j + 1} - beta_{i + 1} alpha_{j + 1} = 0",
                )
    for i, value in enumerate(data.r):
        if value <= 0:
            raise HypothesisViolation("r-positive", f"r_{i + 1} = {format_rational(value)} is not positive")
    return det_fraction_free(build_B(data)) != 0
