"""Edge-density bounds for each drawing class, used as guardrails."""

from __future__ import annotations

from fractions import Fraction

from .drawing import BundledDrawing

# (sides, variant) -> (numerator slope, numerator offset, denominator): m <= (a*n + b) / c
_BOUNDS = {
    (1, "general"): (13, -26, 3),
    (1, "outer"): (8, -13, 3),
    (1, "twolayer"): (5, -7, 3),
    (2, "general"): (43, -78, 5),
    (2, "outer"): (4, -9, 1),
    (2, "twolayer"): (3, -7, 1),
}

MIN_N = 5


def class_bound(sides: int, variant: str, n: int) -> Fraction | None:
    """Maximum edge count of the class on n vertices, or None below the bounds' range."""
    if n < MIN_N:
        return None
    a, b, c = _BOUNDS[(sides, variant)]
    return Fraction(a * n + b, c)


def bound_formula(sides: int, variant: str) -> str:
    a, b, c = _BOUNDS[(sides, variant)]
    core = f"{a}n{b:+d}"
    return core if c == 1 else f"({core})/{c}"


def density_violation(d: BundledDrawing) -> str | None:
    """Message if the drawing has more edges than its class allows, else None."""
    n, m = d.graph.n, d.graph.m
    bound = class_bound(d.sides, d.variant, n)
    if bound is not None and m > bound:
        return (f"{m} edges on {n} vertices exceeds {bound_formula(d.sides, d.variant)} "
                f"= {float(bound):g} for sides={d.sides}, variant={d.variant}")
    return None
