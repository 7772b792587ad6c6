"""Deterministic 64-bit generator (SplitMix64) behind every seeded stream.

The exact update and output sequence is part of the reproducibility
contract: the same seed must produce the same stream on every platform,
so nothing here may ever be replaced by ``random`` or NumPy generators.

State update per draw, all arithmetic mod 2**64:

    state += 0x9E3779B97F4A7C15
    x = state
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB
    output = x ^ (x >> 31)

Unit floats take the top 53 bits: ``(output >> 11) * 2.0**-53``.
"""

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB


def _finalize(x: int) -> int:
    x = ((x ^ (x >> 30)) * _MUL1) & MASK64
    x = ((x ^ (x >> 27)) * _MUL2) & MASK64
    return x ^ (x >> 31)


def mix64(z: int) -> int:
    """First output of a stream seeded with ``z``.

    Used to derive independent per-trial (and per-restart) seeds as
    ``mix64(seed + index)`` so trial streams never overlap.
    """
    return _finalize((z + _GAMMA) & MASK64)


class SplitMix64:
    """Sequential form of the generator; one instance per stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        return _finalize(self.state)

    def next_unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53
