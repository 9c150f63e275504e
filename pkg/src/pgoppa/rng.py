"""Seeded pseudo-random number generation for reproducible experiments.

The generator is splitmix64: 64-bit state advanced by the odd constant
0x9E3779B97F4A7C15, output finalized with two xor-shift-multiply rounds.
It is tiny, fast, and easy to reimplement bit-for-bit in any language,
which is the point: experiment results are keyed to (seed, trial index)
and must be reproducible outside this codebase.

Integer draws use ``next_u64() % n``.  The modulo bias is below n / 2**64
and irrelevant for the desk-scale n used here.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 output function (Stafford variant 13)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 stream with the convenience draws the library needs."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        return mix64(self.state)

    def randrange(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        if n <= 0:
            raise ValueError("randrange() argument must be positive")
        return self.next_u64() % n

    def randint(self, a: int, b: int) -> int:
        """Integer in [a, b], both ends included."""
        return a + self.randrange(b - a + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def sample(self, seq, k: int) -> list:
        """k distinct items, uniform without replacement (partial Fisher-Yates)."""
        pool = list(seq)
        if not 0 <= k <= len(pool):
            raise ValueError("sample size out of range")
        for i in range(k):
            j = i + self.randrange(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randrange(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def trial_stream(seed: int, index: int) -> SplitMix64:
    """Independent per-trial stream derived from (seed, trial index).

    The stream seed is mix64(seed + index * 0x9E3779B97F4A7C15), so streams
    for consecutive indices are decorrelated rather than shifted copies of
    one another, and trial i can be regenerated without replaying 0..i-1.
    """
    return SplitMix64(mix64((seed + index * _GAMMA) & _MASK64))
