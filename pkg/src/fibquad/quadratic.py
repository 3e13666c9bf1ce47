"""Quadratics with guaranteed integer roots built from a triple leg.

Coefficient scheme: a = leg, b = 2*leg*hyp, c = leg**3. The discriminant
is then (2*leg*other)**2, the roots are -hyp +/- other, the vertex sits at
x = -hyp with value -leg*other**2, and the root-to-root integral is
-(4/3)*leg*other**3, all exact. The negative orientation is the mirror
q~(x) = -q(-x), which negates roots, vertex, and signed integral.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .numeric import Rat, isqrt_exact, number_str

TWO_DISTINCT = "two-distinct"
DOUBLE = "double"
IRRATIONAL = "irrational-or-complex"

POSITIVE = "positive"
NEGATIVE = "negative"


@dataclass(frozen=True)
class QuadPoly:
    """Integer-coefficient quadratic a*x^2 + b*x + c with a != 0."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("leading coefficient must be nonzero")

    def coeffs(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def to_dict(self) -> Dict[str, str]:
        return {"a": number_str(self.a), "b": number_str(self.b), "c": number_str(self.c)}


@dataclass(frozen=True)
class RootPair:
    """Exact roots when they are rational; kind tells which case applies.

    x1 carries the +sqrt branch of the root formula, x2 the -sqrt branch,
    so for the triple-built quadratics x1 = -hyp + other and
    x2 = -hyp - other. Both are None for the irrational-or-complex kind.
    """

    x1: Optional[Rat]
    x2: Optional[Rat]
    kind: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "x1": None if self.x1 is None else number_str(self.x1),
            "x2": None if self.x2 is None else number_str(self.x2),
        }


@dataclass(frozen=True)
class AnalysisReport:
    """Roots, vertex, discriminant, and exact root-to-root integral.

    Integral fields are None when the roots are not rational. The signed
    integral runs left to right between the roots, so its breakdown parts
    always sum to it exactly.
    """

    poly: QuadPoly
    roots: RootPair
    vertex_x: Rat
    vertex_y: Rat
    discriminant: int
    integral_signed: Optional[Rat]
    integral_abs: Optional[Rat]
    breakdown: Optional[Tuple[Rat, Rat, Rat]]

    def to_dict(self) -> Dict[str, object]:
        return {
            "poly": self.poly.to_dict(),
            "roots": self.roots.to_dict(),
            "vertex_x": number_str(self.vertex_x),
            "vertex_y": number_str(self.vertex_y),
            "discriminant": number_str(self.discriminant),
            "integral_signed": None if self.integral_signed is None else number_str(self.integral_signed),
            "integral_abs": None if self.integral_abs is None else number_str(self.integral_abs),
            "breakdown": None if self.breakdown is None else {
                "p1": number_str(self.breakdown[0]),
                "p2": number_str(self.breakdown[1]),
                "p3": number_str(self.breakdown[2]),
            },
        }


def build_quadratic(leg: int, hyp: int, orientation: str = POSITIVE) -> QuadPoly:
    """Quadratic (leg, 2*leg*hyp, leg**3) from a triple leg and hypotenuse.

    Requires 0 < leg < hyp and that hyp^2 - leg^2 is a perfect square,
    i.e. (leg, other, hyp) extends to a Pythagorean triple; that square
    root is exactly what makes the roots integers. The negative
    orientation returns the mirror (-leg, 2*leg*hyp, -leg**3).
    """
    if leg <= 0:
        raise ValueError(f"leg must be positive, got {leg}")
    if leg >= hyp:
        raise ValueError(f"need leg < hyp, got leg={leg}, hyp={hyp}")
    if isqrt_exact(hyp * hyp - leg * leg) is None:
        raise ValueError(
            f"hyp^2 - leg^2 = {hyp * hyp - leg * leg} is not a perfect square; "
            f"(leg={leg}, hyp={hyp}) does not extend to a Pythagorean triple"
        )
    if orientation == POSITIVE:
        return QuadPoly(leg, 2 * leg * hyp, leg ** 3)
    if orientation == NEGATIVE:
        return QuadPoly(-leg, 2 * leg * hyp, -(leg ** 3))
    raise ValueError(f"orientation must be {POSITIVE!r} or {NEGATIVE!r}, got {orientation!r}")


def solve_quadratic(q: QuadPoly) -> RootPair:
    """Exact rational roots, or the irrational-or-complex kind.

    Roots are materialized only when the discriminant is a perfect
    square; nothing is ever approximated.
    """
    disc = q.b * q.b - 4 * q.a * q.c
    if disc < 0:
        return RootPair(None, None, IRRATIONAL)
    r = isqrt_exact(disc)
    if r is None:
        return RootPair(None, None, IRRATIONAL)
    if r == 0:
        x = Fraction(-q.b, 2 * q.a)
        return RootPair(x, x, DOUBLE)
    return RootPair(Fraction(-q.b + r, 2 * q.a), Fraction(-q.b - r, 2 * q.a), TWO_DISTINCT)


def roots_via_triple(leg: int, other: int, hyp: int) -> RootPair:
    """Roots (-hyp + other, -hyp - other) straight from the triple.

    Equals solve_quadratic(build_quadratic(leg, hyp)) but shares none of
    its arithmetic, which makes the equality worth testing.
    """
    if not (leg > 0 and other > 0 and hyp > 0 and leg * leg + other * other == hyp * hyp):
        raise ValueError(f"({leg}, {other}, {hyp}) is not a Pythagorean triple")
    return RootPair(Fraction(-hyp + other), Fraction(-hyp - other), TWO_DISTINCT)


def derivative(q: QuadPoly) -> Tuple[int, int]:
    """Slope and intercept (2a, b) of the derivative line."""
    return 2 * q.a, q.b


def evaluate(q: QuadPoly, x) -> Rat:
    """Exact value of q at a rational (or integer) point."""
    x = Fraction(x)
    return (q.a * x + q.b) * x + q.c


def vertex(q: QuadPoly) -> Tuple[Rat, Rat]:
    """Critical point (-b/2a, q(-b/2a)), exact."""
    x = Fraction(-q.b, 2 * q.a)
    return x, evaluate(q, x)


def integrate(q: QuadPoly, lo, hi) -> Rat:
    """Definite integral via the antiderivative (a/3)x^3 + (b/2)x^2 + cx."""
    lo, hi = Fraction(lo), Fraction(hi)

    def antiderivative(x: Fraction) -> Fraction:
        return Fraction(q.a, 3) * x ** 3 + Fraction(q.b, 2) * x ** 2 + q.c * x

    return antiderivative(hi) - antiderivative(lo)


def integral_breakdown(q: QuadPoly, lo, hi) -> Tuple[Rat, Rat, Rat]:
    """Per-term integrals (quadratic, linear, constant); they sum to integrate()."""
    lo, hi = Fraction(lo), Fraction(hi)
    p1 = Fraction(q.a, 3) * (hi ** 3 - lo ** 3)
    p2 = Fraction(q.b, 2) * (hi ** 2 - lo ** 2)
    p3 = Fraction(q.c) * (hi - lo)
    return p1, p2, p3


def analyze(q: QuadPoly) -> AnalysisReport:
    """Full report; the root-to-root integral runs left to right between
    the roots and is omitted when the roots are not rational."""
    roots = solve_quadratic(q)
    vx, vy = vertex(q)
    disc = q.b * q.b - 4 * q.a * q.c
    if roots.kind == IRRATIONAL:
        return AnalysisReport(q, roots, vx, vy, disc, None, None, None)
    lo, hi = min(roots.x1, roots.x2), max(roots.x1, roots.x2)
    signed = integrate(q, lo, hi)
    parts = integral_breakdown(q, lo, hi)
    return AnalysisReport(q, roots, vx, vy, disc, signed, abs(signed), parts)
