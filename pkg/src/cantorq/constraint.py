"""Geometry of the constraint segments and their projection to the line.

The n-th constraint is the segment S_n = {(x, x + 1/n) : -1/n <= x <= 1},
parallel to y = x.  Dropping a perpendicular from a point of S_n to the
real axis lands at 2x + 1/n, which gives an order-preserving bijection
between S_n and an interval of the line; all Voronoi computations in this
package happen on the line through that bijection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .measure import Word


@dataclass(frozen=True)
class ConstraintPoint:
    """A point (x, x + 1/j) on the constraint segment S_j.

    Only the index j and abscissa x are stored; the ordinate is implied,
    so y = x + 1/j cannot be violated by construction.
    """

    j: int
    x: Fraction

    def __post_init__(self):
        if self.j < 1:
            raise ValueError(f"constraint index must be >= 1, got {self.j}")
        object.__setattr__(self, "x", Fraction(self.x))
        if not (-Fraction(1, self.j) <= self.x <= 1):
            raise ValueError(
                f"abscissa {self.x} outside S_{self.j} (needs -1/{self.j} <= x <= 1)")

    @property
    def y(self) -> Fraction:
        return self.x + Fraction(1, self.j)


def rho(x: Fraction, p: ConstraintPoint) -> Fraction:
    """Squared distance from the real point x to the plane point p."""
    return (x - p.x) ** 2 + p.y ** 2


def u_forward(p: ConstraintPoint) -> Fraction:
    """Foot on the real line of the perpendicular to S_j at p: 2x + 1/j."""
    return 2 * p.x + Fraction(1, p.j)


def u_inverse(j: int, t: Fraction) -> ConstraintPoint:
    """Point of S_j whose perpendicular foot is t; rejects t outside the image."""
    x = (Fraction(t) - Fraction(1, j)) / 2
    if not (-Fraction(1, j) <= x <= 1):
        raise ValueError(f"{t} is not in the perpendicular image of S_{j}")
    return ConstraintPoint(j, x)


def feasible_window(n: int) -> tuple[Fraction, Fraction]:
    """Abscissa range of points whose perpendicular foot lies in [0, 1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (-Fraction(1, 2 * n), Fraction(1, 2) - Fraction(1, 2 * n))


def bisector_foot(p: ConstraintPoint, q: ConstraintPoint) -> Fraction:
    """Where the perpendicular bisector of p and q crosses the real axis.

    Uses the generic 2-D formula x = (|q|^2 - |p|^2) / (2 (q_x - p_x));
    for two points on the same S_n this lands at the midpoint of their
    perpendicular feet, but the computation here does not assume that.
    """
    if p.x == q.x and p.j == q.j:
        raise ValueError("bisector of coincident points is undefined")
    return ((q.x ** 2 + q.y ** 2) - (p.x ** 2 + p.y ** 2)) / (2 * (q.x - p.x))


@dataclass(frozen=True)
class PointSet:
    """An ordered codebook of n points on S_n.

    split_set records the set of level-l words whose children were used to
    build the codebook (empty when n is a power of two, or when the set was
    not produced by the closed-form construction).
    """

    n: int
    points: tuple[ConstraintPoint, ...]
    split_set: frozenset[Word] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if len(self.points) != self.n:
            raise ValueError(
                f"expected {self.n} points, got {len(self.points)}")
        lo, hi = feasible_window(self.n)
        prev = None
        for p in self.points:
            if p.j != self.n:
                raise ValueError(f"point {p} is not on S_{self.n}")
            if not (lo <= p.x <= hi):
                raise ValueError(
                    f"abscissa {p.x} outside feasible window [{lo}, {hi}]")
            if prev is not None and p.x <= prev:
                raise ValueError("abscissas must be strictly increasing")
            prev = p.x

    def abscissas(self) -> tuple[Fraction, ...]:
        return tuple(p.x for p in self.points)

    def feet(self) -> tuple[Fraction, ...]:
        """Perpendicular feet of the points on the real line."""
        return tuple(u_forward(p) for p in self.points)
