"""Cantor IFS, basic intervals, centroids, and exact moment identities.

The generating maps are t1(x) = x/3 and t2(x) = x/3 + 2/3.  A word sigma
over the alphabet {1, 2} addresses the composition

    T_sigma = t_{sigma[0]} o t_{sigma[1]} o ... o t_{sigma[k-1]},

i.e. words are stored most-significant-letter FIRST: the first letter of
the word is the map applied LAST.  This convention is easy to invert by
accident; everything in this package relies on it.

J_sigma = T_sigma([0, 1]) is the level-k basic interval (length 3**-k,
mass 2**-k under the invariant measure), and the conditional mean of the
measure on J_sigma is T_sigma(1/2).

All arithmetic here is exact rational; no floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

Word = tuple[int, ...]

#: Mean of the Cantor distribution.
MEAN = Fraction(1, 2)

#: Variance of the Cantor distribution.
VARIANCE = Fraction(1, 8)

#: Enumerations over {1,2}**k refuse to go beyond this level by default.
MAX_ENUM_LEVEL = 20

_ONE_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)


def _check_word(word: Word) -> None:
    for letter in word:
        if letter not in (1, 2):
            raise ValueError(f"word letters must be 1 or 2, got {letter!r}")


def words(k: int) -> Iterator[Word]:
    """All words of length k in lexicographic order."""
    if k < 0:
        raise ValueError("word length must be >= 0")
    return itertools.product((1, 2), repeat=k)


def apply_map(word: Word, x: Fraction) -> Fraction:
    """Apply the composition T_word to x (empty word is the identity)."""
    _check_word(word)
    for letter in reversed(word):
        x = x * _ONE_THIRD
        if letter == 2:
            x += _TWO_THIRDS
    return x


@dataclass(frozen=True)
class BasicInterval:
    """The interval J_word = T_word([0, 1])."""

    word: Word
    left: Fraction
    right: Fraction

    @property
    def level(self) -> int:
        return len(self.word)

    @property
    def mass(self) -> Fraction:
        return Fraction(1, 2 ** self.level)


def basic_interval(word: Word) -> BasicInterval:
    return BasicInterval(tuple(word), apply_map(word, Fraction(0)),
                         apply_map(word, Fraction(1)))


@lru_cache(maxsize=None)
def centroid(word: Word) -> Fraction:
    """Conditional mean of the measure on J_word; equals T_word(1/2)."""
    return apply_map(word, MEAN)


def centroid_numerators(k: int, max_level: int = MAX_ENUM_LEVEL) -> list[int]:
    """Sorted numerators of the level-k centroids over the denominator 2*3**k.

    Built by the doubling recursion c_k = c_{k-1} u (c_{k-1} + 4*3**(k-1))
    starting from c_0 = {1}; the shift exceeds every element of c_{k-1}, so
    concatenation keeps the list sorted.
    """
    if k < 1:
        raise ValueError("level must be >= 1")
    if k > max_level:
        raise ValueError(f"level {k} exceeds enumeration cap {max_level}")
    nums = [1]
    for i in range(1, k + 1):
        shift = 4 * 3 ** (i - 1)
        nums = nums + [v + shift for v in nums]
    return nums


def moment_sum(k: int, m: int, max_level: int = MAX_ENUM_LEVEL) -> int:
    """Sum of m-th powers of the level-k centroid numerators.

    Computed by direct summation, then asserted against the closed forms
    6**k (m = 1) and 2**(k-1) * (3*9**k - 1) (m = 2).
    """
    if m not in (1, 2):
        raise ValueError(f"moment order must be 1 or 2, got {m!r}")
    nums = centroid_numerators(k, max_level=max_level)
    if m == 1:
        total = sum(nums)
        closed = 6 ** k
    else:
        total = sum(v * v for v in nums)
        closed = 2 ** (k - 1) * (3 * 9 ** k - 1)
    if total != closed:
        raise ArithmeticError(
            f"moment enumeration {total} disagrees with closed form {closed} "
            f"(k={k}, m={m})")
    return total


def self_similar_distortion(word: Word, p: tuple[Fraction, Fraction]) -> Fraction:
    """Exact conditional distortion of the plane point p over J_word.

    Equals 9**-k * V + (a(word) - p_x)**2 + p_y**2, the normalized integral
    of the squared distance from points of J_word (on the real axis) to p.
    """
    a, b = p
    k = len(word)
    return Fraction(1, 9 ** k) * VARIANCE + (centroid(word) - a) ** 2 + b * b
