"""Pythagorean triples: window generation, primitivity, scaling.

Windows of four consecutive Fibonacci terms always produce a valid triple,
but not always a primitive one (i = 3 gives (16, 30, 34) with gcd 2), so
primitivity is measured and reported, never assumed. Legs stay in
generation order because the quadratic construction cares which leg seeds
the coefficients.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from .fibonacci import FibWindow
from .numeric import gcd, number_str


@dataclass(frozen=True)
class Triple:
    """Pythagorean triple; construction fails unless a^2 + b^2 = c^2."""

    leg_a: int
    leg_b: int
    hyp: int

    def __post_init__(self):
        if self.leg_a <= 0 or self.leg_b <= 0 or self.hyp <= 0:
            raise ValueError(f"triple sides must be positive: {self.sides()}")
        if self.leg_a ** 2 + self.leg_b ** 2 != self.hyp ** 2:
            raise ValueError(f"not a Pythagorean triple: {self.sides()}")

    def sides(self) -> Tuple[int, int, int]:
        return (self.leg_a, self.leg_b, self.hyp)

    def to_dict(self) -> Dict[str, object]:
        is_primitive, g = primitivity(self)
        return {
            "leg_a": number_str(self.leg_a),
            "leg_b": number_str(self.leg_b),
            "hyp": number_str(self.hyp),
            "gcd": number_str(g),
            "primitive": is_primitive,
        }


def triple_from_window(w: FibWindow) -> Triple:
    """Triple (t0*t3, 2*t1*t2, t1^2 + t2^2) from window terms t0..t3.

    The window at i = 0 is rejected: its first term is 0, which collapses
    one leg.
    """
    if w.i == 0:
        raise ValueError("window at i=0 yields a zero leg; use i >= 1")
    t0, t1, t2, t3 = w.terms
    return Triple(t0 * t3, 2 * t1 * t2, t1 * t1 + t2 * t2)


def is_pythagorean(a: int, b: int, c: int) -> bool:
    """True iff all three are positive and a^2 + b^2 = c^2."""
    return a > 0 and b > 0 and c > 0 and a * a + b * b == c * c


def primitivity(t: Triple) -> Tuple[bool, int]:
    """(is_primitive, g) where g is the gcd of the three sides."""
    g = gcd(gcd(t.leg_a, t.leg_b), t.hyp)
    return g == 1, g


def scale(t: Triple, k: int) -> Triple:
    """Triple with each side multiplied by k >= 1."""
    if k < 1:
        raise ValueError(f"scale factor must be >= 1, got {k}")
    return Triple(k * t.leg_a, k * t.leg_b, k * t.hyp)
