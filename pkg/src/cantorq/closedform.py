"""Closed-form optimal codebooks and their exact error quantities.

For n with 2**l <= n < 2**(l+1), an optimal codebook is built from the
level-l centroids, with n - 2**l of the level-l words "split" into their
two children; any choice of split words gives the same error.  The total
error decomposes exactly as

    total = (unconstrained n-means error) + A,

where A is the extra distortion forced by the points sitting on S_n
instead of on the real line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .constraint import PointSet, rho, u_inverse
from .measure import VARIANCE, Word, centroid, words

V_INFINITY = Fraction(3, 16)


def level_of(n: int) -> int:
    """The unique l with 2**l <= n < 2**(l+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n.bit_length() - 1


def count_optimal_sets(n: int) -> int:
    """Number of admissible split sets: C(2**l, n - 2**l)."""
    l = level_of(n)
    return comb(2 ** l, n - 2 ** l)


def canonical_split_set(n: int) -> frozenset[Word]:
    """The lexicographically smallest n - 2**l words of {1,2}**l."""
    l = level_of(n)
    return frozenset(itertools.islice(words(l), n - 2 ** l))


def admissible_split_sets(n: int) -> Iterator[frozenset[Word]]:
    """All split sets admissible for n, in lexicographic order."""
    l = level_of(n)
    for combo in itertools.combinations(words(l), n - 2 ** l):
        yield frozenset(combo)


def _checked_split_set(n: int, split_set) -> frozenset[Word]:
    if split_set is None:
        return canonical_split_set(n)
    l = level_of(n)
    split_set = frozenset(tuple(w) for w in split_set)
    for w in split_set:
        if len(w) != l or any(c not in (1, 2) for c in w):
            raise ValueError(f"{w} is not a word of length {l} over {{1,2}}")
    if len(split_set) != n - 2 ** l:
        raise ValueError(
            f"split set must have {n - 2 ** l} words for n={n}, "
            f"got {len(split_set)}")
    return split_set


def build_alpha(n: int, split_set: Iterable[Word] | None = None) -> PointSet:
    """The codebook of n points on S_n generated by the given split set.

    Unsplit level-l words contribute the pullback of their centroid;
    split words contribute the pullbacks of both children's centroids.
    n = 1 (level 0, empty split set) gives the single point (-1/4, 3/4).
    """
    split_set = _checked_split_set(n, split_set)
    l = level_of(n)
    pts = []
    for w in words(l):
        if w in split_set:
            pts.append(u_inverse(n, centroid(w + (1,))))
            pts.append(u_inverse(n, centroid(w + (2,))))
        else:
            pts.append(u_inverse(n, centroid(w)))
    pts.sort(key=lambda p: p.x)
    return PointSet(n, tuple(pts), split_set)


@lru_cache(maxsize=None)
def _unsplit_summand(n: int, w: Word) -> Fraction:
    l = level_of(n)
    a = centroid(w)
    return Fraction(1, 2 ** l) * rho(a, u_inverse(n, a))


@lru_cache(maxsize=None)
def _split_summand(n: int, w: Word) -> Fraction:
    l = level_of(n)
    a1, a2 = centroid(w + (1,)), centroid(w + (2,))
    return Fraction(1, 2 ** (l + 1)) * (
        rho(a1, u_inverse(n, a1)) + rho(a2, u_inverse(n, a2)))


def a_term(n: int, split_set: Iterable[Word] | None = None) -> Fraction:
    """The A-term of the error decomposition, by direct summation."""
    split_set = _checked_split_set(n, split_set)
    l = level_of(n)
    total = Fraction(0)
    for w in words(l):
        total += _split_summand(n, w) if w in split_set else _unsplit_summand(n, w)
    return total


def unconstrained_error(n: int) -> Fraction:
    """The unconstrained optimal n-means error for the Cantor distribution."""
    l = level_of(n)
    return Fraction(1, 18 ** l) * VARIANCE * (
        2 ** (l + 1) - n + Fraction(n - 2 ** l, 9))


def unconstrained_baseline(
    n: int, split_set: Iterable[Word] | None = None,
) -> tuple[tuple[Fraction, ...], Fraction]:
    """The unconstrained optimal n-means (the feet of the codebook) and error."""
    alpha = build_alpha(n, split_set)
    return alpha.feet(), unconstrained_error(n)


@dataclass(frozen=True)
class DistortionReport:
    """Exact error of a closed-form codebook, split into its two parts."""

    n: int
    total: Fraction
    variance_term: Fraction
    a_term: Fraction
    split_set: frozenset[Word]


def distortion_closed_form(
    n: int, split_set: Iterable[Word] | None = None,
) -> DistortionReport:
    split_set = _checked_split_set(n, split_set)
    variance = unconstrained_error(n)
    a = a_term(n, split_set)
    return DistortionReport(n, variance + a, variance, a, split_set)


def a_term_closed(n: int) -> Fraction:
    """The A-term without enumeration, via the centroid moment identities.

    Splitting a word w replaces its summand by the two-children summand;
    since the children centroids are a(w) -/+ 3**-(l+1), the replacement
    changes A by exactly 2**-(l+1) * 9**-(l+1) regardless of w, so A only
    depends on how many words are split.  The unsplit sum reduces to the
    level-l first and second centroid moments, which have closed forms.
    """
    l = level_of(n)
    s = Fraction(1, n)
    sum_a = Fraction(2 ** l, 2)
    sum_a2 = Fraction(2 ** l * (3 * 9 ** l - 1), 8 * 9 ** l)
    base = (sum_a2 + 2 * s * sum_a + 2 ** l * s * s) / 2 ** (l + 1)
    return base + Fraction(n - 2 ** l, 2 ** (l + 1) * 9 ** (l + 1))


def quantization_error(n: int) -> Fraction:
    """Exact n-th constrained quantization error V_n, in O(1) operations."""
    return unconstrained_error(n) + a_term_closed(n)


def power_of_two_error(level: int) -> Fraction:
    """V_n at n = 2**level: (1/16) (2**(3-2l) + 2**(3-l) + 9**-l + 3)."""
    if level < 0:
        raise ValueError("level must be >= 0")
    return Fraction(1, 16) * (
        Fraction(8, 4 ** level) + Fraction(8, 2 ** level)
        + Fraction(1, 9 ** level) + 3)
