"""Integer combinatorics: binomials, excluded-value symmetric sums (tau),
and strictly increasing index sequences with their complements."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

# Above this size the definitional subset enumeration gets expensive and the
# O(ell^2) product expansion takes over.
_SUBSET_SUM_LIMIT = 12


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 whenever k falls outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class TauKey:
    """Validated index triple (ell, m, j) for the excluded-value symmetric sums.

    m = 0 always evaluates to 1; m = ell with j > 0 evaluates to 0; indices
    outside 0 <= m <= ell, 0 <= j <= ell are not defined and are rejected.
    """

    ell: int
    m: int
    j: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"tau needs ell >= 1, got ell={self.ell}")
        if not 0 <= self.m <= self.ell:
            raise ValueError(f"tau index m={self.m} outside [0, {self.ell}]")
        if not 0 <= self.j <= self.ell:
            raise ValueError(f"tau index j={self.j} outside [0, {self.ell}]")


def _sym_sums_subset(ell: int, j: int) -> tuple[int, ...]:
    """Elementary symmetric sums of {1..ell} minus the value j, by definition:
    entry m is the sum over all m-element subsets of the product of elements."""
    values = [i for i in range(1, ell + 1) if i != j]
    sums = [0] * (ell + 1)
    sums[0] = 1
    for m in range(1, len(values) + 1):
        sums[m] = sum(math.prod(c) for c in itertools.combinations(values, m))
    return tuple(sums)


def _sym_sums_product(ell: int, j: int) -> tuple[int, ...]:
    """Same sums via expanding prod(t + i) over i in {1..ell} minus j, O(ell^2)."""
    sums = [0] * (ell + 1)
    sums[0] = 1
    top = 0
    for i in range(1, ell + 1):
        if i == j:
            continue
        top += 1
        for m in range(top, 0, -1):
            sums[m] = sums[m] + i * sums[m - 1]
    return tuple(sums)


@lru_cache(maxsize=None)
def _sym_sums(ell: int, j: int) -> tuple[int, ...]:
    if ell <= _SUBSET_SUM_LIMIT:
        return _sym_sums_subset(ell, j)
    return _sym_sums_product(ell, j)


def tau(ell: int, m: int, j: int = 0) -> int:
    """Sum of products of m distinct values from {1..ell} with the value j excluded.

    By convention the empty product makes m = 0 evaluate to 1 for every j,
    and m = ell with j > 0 evaluates to 0 (no admissible subset is left).
    """
    TauKey(ell, m, j)
    if m == 0:
        return 1
    if j > 0 and m == ell:
        return 0
    return _sym_sums(ell, j)[m]


def tau_via_recurrence(ell: int, m: int, j: int) -> int:
    """Evaluate tau through the alternating expansion in powers of j:

        tau(ell, m, j) = sum_{k=0}^{m} (-1)^k tau(ell, m-k, 0) j^k

    Valid for j > 0 with m != ell; j = 0 falls back to the direct value.
    """
    TauKey(ell, m, j)
    if j == 0:
        return tau(ell, m, 0)
    if m == ell:
        raise ValueError("the alternating expansion is not valid at m = ell with j > 0")
    return sum((-1) ** k * tau(ell, m - k, 0) * j**k for k in range(m + 1))


@dataclass(frozen=True)
class IndexSeq:
    """Strictly increasing sequence of indices inside [0, ell-1]."""

    ell: int
    entries: tuple[int, ...]

    def __init__(self, ell: int, entries):
        items = tuple(int(e) for e in entries)
        if ell < 1:
            raise ValueError(f"index sequence needs ell >= 1, got {ell}")
        if not 1 <= len(items) <= ell:
            raise ValueError(f"index sequence length {len(items)} outside [1, {ell}]")
        if any(b <= a for a, b in zip(items, items[1:])):
            raise ValueError(f"index sequence must be strictly increasing: {items}")
        if items[0] < 0 or items[-1] > ell - 1:
            raise ValueError(f"index sequence entries {items} outside [0, {ell - 1}]")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "entries", items)

    @property
    def k(self) -> int:
        return len(self.entries)

    def complement(self) -> "IndexSeq":
        """Reflect every entry through (ell-1)/2 and reverse; an involution."""
        return IndexSeq(self.ell, tuple(self.ell - 1 - e for e in reversed(self.entries)))


def complement_seq(mu: IndexSeq) -> IndexSeq:
    return mu.complement()


def enumerate_index_seqs(ell: int, k: int) -> list[IndexSeq]:
    """All C(ell, k) strictly increasing sequences in [0, ell-1], lexicographic."""
    if ell < 1:
        raise ValueError(f"enumeration needs ell >= 1, got {ell}")
    if not 1 <= k <= ell:
        raise ValueError(f"enumeration needs 1 <= k <= ell, got k={k}, ell={ell}")
    return [IndexSeq(ell, combo) for combo in itertools.combinations(range(ell), k)]
