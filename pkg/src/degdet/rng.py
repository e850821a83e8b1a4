"""Seeded random generation for reproducible verification sweeps.

The generator is SplitMix64, chosen because the whole algorithm fits in a
few lines of documented 64-bit arithmetic, so an independent implementation
of this tool can reproduce identical trial streams from the same seed:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9  mod 2^64
    z <- (z XOR (z >> 27)) * 0x94D049BB133111EB  mod 2^64
    output z XOR (z >> 31)

Bounded draws use rejection sampling (discard outputs at or above the
largest multiple of the bound), so they are exactly uniform.  Random
rationals are numerator/denominator pairs with the numerator uniform in
[-9, 9] and the denominator uniform in [1, 4].
"""

from __future__ import annotations

from fractions import Fraction

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Exactly uniform integer in [0, bound); rejection on the top remainder band."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound

    def int_between(self, lo: int, hi: int) -> int:
        """Exactly uniform integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.below(hi - lo + 1)

    def rational(self) -> Fraction:
        """Numerator uniform in [-9, 9], denominator uniform in [1, 4]."""
        return Fraction(self.int_between(-9, 9), self.int_between(1, 4))

    def nonzero_rational(self) -> Fraction:
        while True:
            value = self.rational()
            if value != 0:
                return value

    def positive_rational(self) -> Fraction:
        """Same scheme restricted to positive numerators (uniform in [1, 9])."""
        return Fraction(self.int_between(1, 9), self.int_between(1, 4))

    def distinct_rationals(self, count: int) -> tuple[Fraction, ...]:
        """Pairwise distinct rationals by redrawing collisions."""
        seen: list[Fraction] = []
        while len(seen) < count:
            value = self.rational()
            if value not in seen:
                seen.append(value)
        return tuple(seen)

    def distinct_positive_rationals(self, count: int) -> tuple[Fraction, ...]:
        seen: list[Fraction] = []
        while len(seen) < count:
            value = self.positive_rational()
            if value not in seen:
                seen.append(value)
        return tuple(seen)
