from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorq import (
    MEAN,
    VARIANCE,
    apply_map,
    basic_interval,
    centroid,
    centroid_numerators,
    moment_sum,
    self_similar_distortion,
    words,
)

F = Fraction

word_st = st.lists(st.sampled_from((1, 2)), max_size=8).map(tuple)
rational_st = st.fractions(min_value=-3, max_value=3)


def test_apply_map_empty_is_identity():
    assert apply_map((), F(1, 2)) == F(1, 2)


def test_apply_map_single_letters():
    assert apply_map((1,), F(1, 2)) == F(1, 6)
    assert apply_map((2,), F(1, 2)) == F(5, 6)


def test_apply_map_first_letter_applied_last():
    # T_21(x) = T_2(T_1(x))
    assert apply_map((2, 1), F(1, 2)) == F(13, 18)


def test_apply_map_rejects_bad_letter():
    with pytest.raises(ValueError):
        apply_map((1, 3), F(0))


def test_basic_interval_examples():
    assert (basic_interval(()).left, basic_interval(()).right) == (0, 1)
    j2 = basic_interval((2,))
    assert (j2.left, j2.right) == (F(2, 3), 1)
    j12 = basic_interval((1, 2))
    assert (j12.left, j12.right) == (F(2, 9), F(1, 3))


@given(word_st)
def test_basic_interval_length_and_mass(w):
    j = basic_interval(w)
    assert j.right - j.left == F(1, 3 ** len(w))
    assert 0 <= j.left < j.right <= 1
    assert j.mass == F(1, 2 ** len(w))


@pytest.mark.parametrize("k", range(1, 13))
def test_level_masses_sum_to_one(k):
    assert sum(basic_interval(w).mass for w in words(k)) == 1


def test_centroid_examples():
    assert centroid(()) == MEAN
    assert centroid((1,)) == F(1, 6)
    assert centroid((2,)) == F(5, 6)
    assert centroid((2, 2)) == F(17, 18)


@given(word_st)
def test_children_centroids_average_to_parent(w):
    assert centroid(w + (1,)) + centroid(w + (2,)) == 2 * centroid(w)


def test_centroid_numerators_small_levels():
    assert centroid_numerators(1) == [1, 5]
    assert centroid_numerators(2) == [1, 5, 13, 17]
    assert centroid_numerators(3) == [1, 5, 13, 17, 37, 41, 49, 53]


@pytest.mark.parametrize("k", range(1, 11))
def test_centroid_numerators_match_enumerated_centroids(k):
    # independent route: enumerate words and scale the exact centroids
    expected = sorted(centroid(w) * 2 * 3 ** k for w in words(k))
    assert centroid_numerators(k) == [int(v) for v in expected]


def test_centroid_numerators_respects_cap():
    with pytest.raises(ValueError):
        centroid_numerators(21)
    assert len(centroid_numerators(21, max_level=21)) == 2 ** 21


@pytest.mark.parametrize("k", range(1, 13))
def test_first_moment_closed_form(k):
    assert moment_sum(k, 1) == 6 ** k


def test_second_moment_resolves_spec_discrepancy():
    # Direct enumeration at k=2: 1 + 25 + 169 + 289 = 484, agreeing with the
    # closed form 2**(k-1) * (3*9**k - 1) = 484.  (A quoted value of 482 for
    # this sum is an arithmetic slip; the enumeration is the ground truth.)
    by_hand = sum(v * v for v in (1, 5, 13, 17))
    assert by_hand == 484
    assert moment_sum(2, 2) == 484
    assert moment_sum(1, 2) == 26


@pytest.mark.parametrize("k", range(1, 13))
def test_second_moment_closed_form(k):
    assert moment_sum(k, 2) == 2 ** (k - 1) * (3 * 9 ** k - 1)


def test_moment_sum_rejects_bad_order():
    with pytest.raises(ValueError):
        moment_sum(3, 0)
    with pytest.raises(ValueError):
        moment_sum(3, 3)


def test_self_similar_distortion_examples():
    assert self_similar_distortion((), (MEAN, F(0))) == VARIANCE
    assert self_similar_distortion((), (F(-1, 4), F(3, 4))) == F(5, 4)
    assert self_similar_distortion((1,), (F(1, 6), F(0))) == F(1, 72)


@settings(max_examples=60)
@given(word_st, rational_st, rational_st)
def test_self_similar_one_level_recursion(w, a, b):
    lhs = self_similar_distortion(w, (a, b))
    rhs = (self_similar_distortion(w + (1,), (a, b))
           + self_similar_distortion(w + (2,), (a, b))) / 2
    assert lhs == rhs


@pytest.mark.parametrize("i", range(20))
def test_single_point_distortion_on_s1_is_quadratic(i):
    # distortion of (a, a+1) over [0,1] equals 2a^2 + a + 11/8
    a = F(i - 10, 13)
    assert self_similar_distortion((), (a, a + 1)) == 2 * a * a + a + F(11, 8)
