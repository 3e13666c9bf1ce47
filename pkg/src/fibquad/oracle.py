"""Independent brute-force oracles and the registered claim sweeps.

The oracles deliberately use different formulas than the main paths:
Simpson's three-point rule instead of the antiderivative, an exhaustive
scan instead of the window construction, direct substitution instead of
the solver. A bug in one path then cannot confirm itself.

The claim registry drives the `verify` CLI subcommand and the
fault-injection self-test: a verifier that cannot fail is not evidence,
so the sweep accepts a deliberate coefficient mutation and must report it.
"""

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import families
from .fibonacci import fib_window, mod3_witness, verify_fib4n_mod3
from .numeric import Rat
from .quadratic import (
    POSITIVE,
    TWO_DISTINCT,
    QuadPoly,
    build_quadratic,
    evaluate,
    integrate,
    solve_quadratic,
)
from .report import VerificationReport, make_report
from .triples import Triple, primitivity, scale, triple_from_window


def simpson_exact(q: QuadPoly, lo, hi) -> Rat:
    """Three-point Newton-Cotes rule on exact rationals.

    Exact for polynomials of degree <= 3 and computed without the
    antiderivative, so it is a genuinely independent check on integrate().
    """
    lo, hi = Fraction(lo), Fraction(hi)
    mid = (lo + hi) / 2

    def value(x: Fraction) -> Fraction:
        return q.a * x * x + q.b * x + q.c

    return (hi - lo) / 6 * (value(lo) + 4 * value(mid) + value(hi))


def root_check(q: QuadPoly, r) -> bool:
    """True iff r is an exact root of q."""
    return evaluate(q, r) == 0


def enumerate_triples(hyp_max: int) -> List[Triple]:
    """Every triple with hypotenuse <= hyp_max, by exhaustive scan.

    Legs come out sorted (a <= b), one entry per triple. Quadratic in
    hyp_max, which is the point: it shares nothing with the window
    construction it cross-checks.
    """
    found = []
    for c in range(5, hyp_max + 1):
        c2 = c * c
        for a in range(3, c):
            a2 = a * a
            if 2 * a2 > c2:
                break
            b2 = c2 - a2
            b = math.isqrt(b2)
            if b * b == b2:
                found.append(Triple(a, b, c))
    return found


@dataclass(frozen=True)
class PolyFault:
    """Deliberate single-coefficient mutation for harness self-tests."""

    flavor: str  # "f" or "g"
    index: int   # window index whose polynomial gets corrupted
    coeff: str   # "a", "b", or "c"
    delta: int = 1

    def apply(self, i: int, flavor: str, poly: QuadPoly) -> QuadPoly:
        if i != self.index or flavor != self.flavor:
            return poly
        a, b, c = poly.coeffs()
        if self.coeff == "a":
            a += self.delta
        elif self.coeff == "b":
            b += self.delta
        elif self.coeff == "c":
            c += self.delta
        else:
            raise ValueError(f"coeff must be 'a', 'b', or 'c', got {self.coeff!r}")
        return QuadPoly(a, b, c)


@dataclass(frozen=True)
class SweepConfig:
    """Bounds for the registered claims; defaults match the CLI defaults."""

    triples_max: int = 200
    scale_max: int = 50
    roots_max: int = 100
    family_max: int = 1000
    mod3_max: int = 10_000
    witness_max: int = 500
    theorem3_max: int = 100
    fault: Optional[PolyFault] = None


def claim_window_triples(config: SweepConfig) -> VerificationReport:
    """Window triples: recompute the three products inline and confirm
    both the Pythagorean identity and agreement with triple_from_window."""
    t0 = time.perf_counter()
    counterexamples = []
    for i in range(1, config.triples_max + 1):
        w = fib_window(i)
        f0, f1, f2, f3 = w.terms
        alpha, beta, gamma = f0 * f3, 2 * f1 * f2, f1 * f1 + f2 * f2
        if alpha <= 0 or beta <= 0 or gamma <= 0 or alpha * alpha + beta * beta != gamma * gamma:
            counterexamples.append({"i": str(i), "problem": "alpha^2 + beta^2 != gamma^2"})
            continue
        if triple_from_window(w).sides() != (alpha, beta, gamma):
            counterexamples.append({"i": str(i), "problem": "construction disagrees with direct products"})
    return make_report(
        "window-triples", f"windows 1..{config.triples_max}", counterexamples,
        time.perf_counter() - t0,
    )


def claim_scaling(config: SweepConfig) -> VerificationReport:
    """Scaling: identity survives multiplication by k and the side gcd
    multiplies by exactly k."""
    t0 = time.perf_counter()
    counterexamples = []
    bases = [triple_from_window(fib_window(i)) for i in range(1, 7)]
    for t in bases:
        base_g = primitivity(t)[1]
        for k in range(1, config.scale_max + 1):
            s = scale(t, k)
            if s.sides() != tuple(k * side for side in t.sides()):
                counterexamples.append({"triple": [str(x) for x in t.sides()], "k": str(k),
                                        "problem": "sides not scaled componentwise"})
                continue
            if primitivity(s)[1] != k * base_g:
                counterexamples.append({"triple": [str(x) for x in t.sides()], "k": str(k),
                                        "problem": "gcd did not scale by k"})
    return make_report(
        "scaling", f"window triples 1..6, k in 1..{config.scale_max}",
        counterexamples, time.perf_counter() - t0,
    )


def claim_roots(config: SweepConfig) -> VerificationReport:
    """Root formula: the solver's roots on the built quadratic must equal
    -hyp +/- other and be integers, for both choices of seed leg."""
    t0 = time.perf_counter()
    counterexamples = []
    for i in range(1, config.roots_max + 1):
        t = triple_from_window(fib_window(i))
        for leg, other in ((t.leg_a, t.leg_b), (t.leg_b, t.leg_a)):
            q = build_quadratic(leg, t.hyp, POSITIVE)
            rp = solve_quadratic(q)
            expected = (Fraction(-t.hyp + other), Fraction(-t.hyp - other))
            if rp.kind != TWO_DISTINCT or (rp.x1, rp.x2) != expected:
                counterexamples.append({"i": str(i), "leg": str(leg),
                                        "problem": "solver disagrees with -hyp +/- other"})
                continue
            if rp.x1.denominator != 1 or rp.x2.denominator != 1:
                counterexamples.append({"i": str(i), "leg": str(leg),
                                        "problem": "roots are not integers"})
    return make_report(
        "roots", f"windows 1..{config.roots_max}, both legs", counterexamples,
        time.perf_counter() - t0,
    )


def claim_family345(config: SweepConfig) -> VerificationReport:
    """Scaled (3,4,5) family: roots, derivative root, vertex value, and
    |integral| must match their closed forms at every n."""
    t0 = time.perf_counter()
    counterexamples = []
    closed_roots = {
        families.FLAVOR_F: lambda n: (Fraction(-(n + 1)), Fraction(-9 * (n + 1))),
        families.FLAVOR_G: lambda n: (Fraction(-2 * (n + 1)), Fraction(-8 * (n + 1))),
    }
    closed_vertex_y = {
        families.FLAVOR_F: lambda n: Fraction(-48 * (n + 1) ** 3),
        families.FLAVOR_G: lambda n: Fraction(-36 * (n + 1) ** 3),
    }
    for n in range(0, config.family_max + 1):
        for flavor in (families.FLAVOR_F, families.FLAVOR_G):
            _, q = families.family_345(n, flavor)
            rp = solve_quadratic(q)
            if (rp.x1, rp.x2) != closed_roots[flavor](n):
                counterexamples.append({"n": str(n), "flavor": flavor, "problem": "roots off closed form"})
                continue
            vx = Fraction(-q.b, 2 * q.a)
            if vx != Fraction(-5 * (n + 1)):
                counterexamples.append({"n": str(n), "flavor": flavor, "problem": "derivative root off -5(n+1)"})
                continue
            if evaluate(q, vx) != closed_vertex_y[flavor](n):
                counterexamples.append({"n": str(n), "flavor": flavor, "problem": "vertex value off closed form"})
                continue
            got = abs(integrate(q, rp.x2, rp.x1))
            if got != families.family_345_integral_abs(n, flavor):
                counterexamples.append({"n": str(n), "flavor": flavor, "problem": "|integral| off closed form",
                                        "value": str(got)})
    return make_report(
        "family345", f"n in 0..{config.family_max}, flavors f and g", counterexamples,
        time.perf_counter() - t0,
    )


def claim_mod3(config: SweepConfig) -> VerificationReport:
    """Divisibility lemma sweep plus witness existence and uniqueness on
    every window."""
    t0 = time.perf_counter()
    counterexamples = list(verify_fib4n_mod3(config.mod3_max).counterexamples)
    for i in range(1, config.witness_max + 1):
        w = fib_window(i)
        hits = [pos for pos, term in enumerate(w.terms) if term % 3 == 0]
        if len(hits) != 1:
            counterexamples.append({"i": str(i), "problem": f"{len(hits)} terms divisible by 3"})
        elif mod3_witness(w) != hits[0]:
            counterexamples.append({"i": str(i), "problem": "witness position disagrees with scan"})
    return make_report(
        "mod3", f"multiples 4n with n in 1..{config.mod3_max}; windows 1..{config.witness_max}",
        counterexamples, time.perf_counter() - t0,
    )


def claim_theorem3(config: SweepConfig) -> VerificationReport:
    """Integer-integral sweep, then an independent Simpson pass over the
    same members; the configured fault, if any, is applied to both."""
    t0 = time.perf_counter()
    mutate = config.fault.apply if config.fault is not None else None
    counterexamples = list(families.verify_theorem3(config.theorem3_max, mutate=mutate).counterexamples)
    for i in range(1, config.theorem3_max + 1):
        for member in (families.build_f(i), families.build_g(i)):
            poly = member.poly
            if mutate is not None:
                poly = mutate(i, member.flavor, poly)
            closed = member.closed_roots
            lo, hi = min(closed.x1, closed.x2), max(closed.x1, closed.x2)
            if simpson_exact(poly, lo, hi) != integrate(poly, lo, hi):
                counterexamples.append({"i": str(i), "flavor": member.flavor,
                                        "problem": "Simpson disagrees with antiderivative"})
            if not (root_check(poly, closed.x1) and root_check(poly, closed.x2)):
                counterexamples.append({"i": str(i), "flavor": member.flavor,
                                        "problem": "closed-form roots fail direct evaluation"})
    return make_report(
        "theorem3", f"windows 1..{config.theorem3_max}, flavors f and g", counterexamples,
        time.perf_counter() - t0,
    )


CLAIMS = {
    "window-triples": claim_window_triples,
    "scaling": claim_scaling,
    "roots": claim_roots,
    "family345": claim_family345,
    "mod3": claim_mod3,
    "theorem3": claim_theorem3,
}

CLAIM_ORDER = tuple(CLAIMS)


def run_claim(name: str, config: Optional[SweepConfig] = None) -> VerificationReport:
    """Run one registered claim by name."""
    if name not in CLAIMS:
        raise ValueError(f"unknown claim {name!r}; known: {', '.join(CLAIM_ORDER)}")
    return CLAIMS[name](config or SweepConfig())


def run_all_claims(config: Optional[SweepConfig] = None,
                   names: Optional[List[str]] = None) -> List[VerificationReport]:
    """Run the registered claims (all by default) in registry order."""
    config = config or SweepConfig()
    selected = CLAIM_ORDER if names is None else tuple(names)
    return [run_claim(name, config) for name in selected]
