"""Deterministic sampling for the verification harnesses.

The random stream must be reproducible across implementations and
languages, so instead of a library generator the harnesses use splitmix64
with an explicit 64-bit seed.  The full algorithm, so that an independent
implementation can replay any reported run:

    state  = seed mod 2^64
    next():
        state = (state + 0x9E3779B97F4A7C15) mod 2^64
        x = state
        x = ((x XOR (x >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
        x = ((x XOR (x >> 27)) * 0x94D049BB133111EB) mod 2^64
        return x XOR (x >> 31)

Derived samples are defined exactly as:

    unit_float():      (next() >> 11) * 2^-53        (uniform in [0, 1))
    fraction():        sign * num / den  with num = next() >> 34 (30 bits),
                       den = (next() >> 34) + 1, sign = -1 if next() is odd
    box_float(h):      2h * unit_float() - h          (uniform in [-h, h))

Each composite sample consumes generator outputs in the order written
above, left to right.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ComplexScalar

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

__all__ = [
    "SplitMix64",
    "random_fraction",
    "random_exact_complex",
    "random_nonzero_exact_complex",
    "random_box_float",
    "random_float_complex",
]


class SplitMix64:
    """The splitmix64 generator; one 64-bit word of state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        x = self.state
        x = ((x ^ (x >> 30)) * _MIX1) & _MASK64
        x = ((x ^ (x >> 27)) * _MIX2) & _MASK64
        return x ^ (x >> 31)

    def unit_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


def random_fraction(rng: SplitMix64) -> Fraction:
    """A signed rational with numerator below 2^30 and denominator in [1, 2^30]."""
    num = rng.next_u64() >> 34
    den = (rng.next_u64() >> 34) + 1
    sign = -1 if rng.next_u64() & 1 else 1
    return Fraction(sign * num, den)


def random_exact_complex(rng: SplitMix64) -> ComplexScalar:
    re = random_fraction(rng)
    im = random_fraction(rng)
    return ComplexScalar(re, im)


def random_nonzero_exact_complex(rng: SplitMix64) -> ComplexScalar:
    while True:
        z = random_exact_complex(rng)
        if not z.is_zero:
            return z


def random_box_float(rng: SplitMix64, half_width: float) -> float:
    return 2.0 * half_width * rng.unit_float() - half_width


def random_float_complex(rng: SplitMix64, half_width: float) -> ComplexScalar:
    re = random_box_float(rng, half_width)
    im = random_box_float(rng, half_width)
    return ComplexScalar(re, im)
