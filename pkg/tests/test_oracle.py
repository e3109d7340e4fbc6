import random
from fractions import Fraction

import pytest

from cantorq import (
    ConstraintPoint,
    EmptyCellError,
    Partition,
    RefinementDepthError,
    build_alpha,
    cell_measures,
    distortion_closed_form,
    dp_optimal,
    exact_distortion,
    feasible_window,
    interval_measures,
    level_of,
    lloyd_step,
    u_inverse,
    unconstrained_baseline,
)

F = Fraction


def test_exact_distortion_one_point():
    assert exact_distortion(1, build_alpha(1)) == F(5, 4)


def test_exact_distortion_matches_closed_form_small():
    assert exact_distortion(2, build_alpha(2)) == F(41, 72)
    assert exact_distortion(3, build_alpha(3)) == F(67, 162)


@pytest.mark.parametrize("n", range(1, 33))
def test_exact_distortion_agrees_with_closed_form(n):
    assert exact_distortion(n, build_alpha(n)) == distortion_closed_form(n).total


def test_exact_distortion_collapses_duplicates():
    p = ConstraintPoint(2, F(-1, 6))
    assert exact_distortion(2, [p, p]) == exact_distortion(2, [p])


def test_exact_distortion_rejects_wrong_segment():
    with pytest.raises(ValueError):
        exact_distortion(2, [ConstraintPoint(3, F(0))])
    with pytest.raises(ValueError):
        exact_distortion(2, [])


def test_refinement_depth_error_when_boundary_is_in_cantor_set():
    # feet 0 and 1/2 put the cell boundary at 1/4, which lies in the Cantor
    # set without being an interval endpoint, so refinement cannot separate
    pts = [u_inverse(2, F(0)), u_inverse(2, F(1, 2))]
    with pytest.raises(RefinementDepthError):
        exact_distortion(2, pts, max_depth=12)


def test_empty_cell_error():
    # middle cell sits entirely inside the gap (1/3, 2/3)
    pts = [u_inverse(3, F(2, 5)), u_inverse(3, F(21, 50)), u_inverse(3, F(22, 50))]
    with pytest.raises(EmptyCellError):
        lloyd_step(3, pts)


def test_lloyd_step_rejects_duplicates():
    p = ConstraintPoint(2, F(-1, 6))
    with pytest.raises(ValueError):
        lloyd_step(2, [p, p])


@pytest.mark.parametrize("n", range(1, 33))
def test_lloyd_fixed_point_at_optimum(n):
    alpha = build_alpha(n)
    assert lloyd_step(n, alpha).abscissas() == alpha.abscissas()


def test_lloyd_one_point_converges_in_one_step():
    for t in (F(0), F(1, 3), F(9, 10)):
        start = [u_inverse(1, t)]
        assert lloyd_step(1, start).abscissas() == (F(-1, 4),)


def test_lloyd_two_point_iteration_reaches_optimum():
    # a start like (-1/4, 0) has its cell boundary at 1/4, inside the Cantor
    # set, which the evaluator rejects by design; start just off it instead
    current = [ConstraintPoint(2, F(-9, 40)), ConstraintPoint(2, F(0))]
    for _ in range(50):
        stepped = lloyd_step(2, current)
        if stepped.abscissas() == tuple(p.x for p in current):
            break
        current = stepped.points
    assert stepped.abscissas() == build_alpha(2).abscissas()


def _random_start(rng, n):
    """Random codebook whose feet are multiples of 3**-7, so every cell
    boundary is an odd-numerator rational over 2*3**7 or an interval
    endpoint; neither stalls the refinement."""
    feet = rng.sample(range(1, 3 ** 7), n)
    return [u_inverse(n, F(t, 3 ** 7)) for t in sorted(feet)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lloyd_descent_from_random_starts(n):
    rng = random.Random(20240 + n)
    optimum = distortion_closed_form(n).total
    for _ in range(25):
        pts = _random_start(rng, n)
        try:
            before = exact_distortion(n, pts)
            after = exact_distortion(n, lloyd_step(n, pts))
        except (RefinementDepthError, EmptyCellError):
            continue
        assert after <= before
        assert after >= optimum


def test_partition_validation():
    Partition(3, (2, 5))
    with pytest.raises(ValueError):
        Partition(2, (0,))
    with pytest.raises(ValueError):
        Partition(2, (3, 2))


def test_dp_examples():
    _, v1 = dp_optimal(1, 1)
    assert v1 == F(5, 4)
    ps2, v2 = dp_optimal(2, 5)
    assert v2 == F(41, 72)
    assert ps2.abscissas() == build_alpha(2).abscissas()
    ps3, v3 = dp_optimal(3, 5)
    assert v3 == F(67, 162)
    assert ps3.abscissas() == build_alpha(3).abscissas()


def test_dp_rejects_too_many_points():
    with pytest.raises(ValueError):
        dp_optimal(5, 2)


@pytest.mark.parametrize("n", range(1, 13))
def test_dp_agrees_with_closed_form_at_level_8(n):
    ps, v = dp_optimal(n, 8)
    assert v == distortion_closed_form(n).total
    assert set(ps.abscissas()) == set(build_alpha(n).abscissas())


@pytest.mark.parametrize("n", range(1, 17))
def test_voronoi_measures_preserved(n):
    alpha = build_alpha(n)
    constrained = cell_measures(n, alpha)
    means, _ = unconstrained_baseline(n)
    midpoints = [(means[i] + means[i + 1]) / 2 for i in range(len(means) - 1)]
    unconstrained = interval_measures(midpoints)
    assert constrained == unconstrained
    assert sum(constrained) == 1
    # each cell holds one or half of a level-l interval's mass
    l = level_of(n)
    assert set(constrained) <= {F(1, 2 ** l), F(1, 2 ** (l + 1))}
