"""Deterministic pseudo-randomness for reproducible test batteries.

A fixed 64-bit linear congruential generator (Knuth's MMIX multiplier)
seeds every randomized check in the package so identical seeds replay
identical runs across platforms and backends:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

Draws take the top 48 bits of the state.  Rational draws use denominators
of at most 1000.
"""

from __future__ import annotations

from .exact import Rat, rational

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1
MAX_DENOMINATOR = 1000


class Lcg64:
    """64-bit LCG with 48-bit output draws."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u48(self) -> int:
        self._state = (_MULT * self._state + _INC) & _MASK
        return self._state >> 16

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u48() % (hi - lo + 1)

    def rational(self, bound: int) -> Rat:
        """Rational in [-bound, bound] with denominator <= 1000."""
        den = self.randint(1, MAX_DENOMINATOR)
        num = self.randint(-bound * den, bound * den)
        return rational(num, den)
