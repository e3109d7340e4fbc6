"""Limiting behavior of the constrained error sequence.

V_n decreases to 3/16, the squared perpendicular distance from the mean
to the limiting constraint line y = x.  The excess V_n - 3/16 decays like
2**-l (not like a power of n**(-1/d) for finite d), so the dimension
estimate 2 log n / (-log excess) tends to 2 while the coefficient
n**2 * excess grows without bound.

The only module allowed to produce floats: every excess is computed as an
exact rational first and only its logarithm is floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .closedform import V_INFINITY, quantization_error


def v_infinity() -> Fraction:
    return V_INFINITY


def _log(f: Fraction) -> float:
    # math.log on the big-integer parts; float(f) would underflow for
    # excesses around 2**-1100
    return math.log(f.numerator) - math.log(f.denominator)


@dataclass(frozen=True)
class AsymptoticSample:
    n: int
    v_n: Fraction
    excess: Fraction
    dim_estimate: float
    coeff_estimate: float


def sample_at(n: int) -> AsymptoticSample:
    if n < 2:
        raise ValueError("n must be >= 2")
    v = quantization_error(n)
    excess = v - V_INFINITY
    if excess <= 0:
        raise ArithmeticError(f"excess must be positive, got {excess} at n={n}")
    dim = 2 * math.log(n) / -_log(excess) if excess < 1 else math.inf
    coeff_exact = n * n * excess
    try:
        coeff = float(coeff_exact)
    except OverflowError:
        coeff = math.exp(_log(coeff_exact))
    return AsymptoticSample(n, v, excess, dim, coeff)


def dimension_sequence(max_level: int) -> list[AsymptoticSample]:
    """Samples at n = 2**l for l = 1..max_level; dim_estimate approaches 2."""
    if max_level < 1:
        raise ValueError("max_level must be >= 1")
    return [sample_at(2 ** l) for l in range(1, max_level + 1)]


def coefficient_sequence(max_level: int) -> list[AsymptoticSample]:
    """Same sample points; coeff_estimate is eventually strictly increasing
    and unbounded, with consecutive ratios tending to 2."""
    return dimension_sequence(max_level)
