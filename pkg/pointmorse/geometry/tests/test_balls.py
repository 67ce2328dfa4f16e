from fractions import Fraction
from itertools import combinations

import numpy.random as rnd
from numpy.testing import assert_, assert_equal, assert_raises
from pytest import mark

from pointmorse import Kernel, Mode
from pointmorse.geometry import (
    Ball,
    circumcenter_in_affine_hull,
    has_empty_sphere,
    min_enclosing_ball,
)
from pointmorse.linalg import squared_dist

SQUARE = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def _random_points(rng, dim: int, size: int):
    points = set()

    while len(points) < size:
        points.add(tuple(Fraction(int(a)) for a in rng.integers(-4, 5, dim)))

    return sorted(points)


@mark.parametrize(
    "points, center, squared_radius",
    [
        ([(1, 0), (-1, 0)], (0, 0), 1),
        (SQUARE, (0, 0), 2),
        ([(3, 4)], (3, 4), 0),
        ([(0, 0, 0), (2, 0, 0), (0, 2, 0)], (1, 1, 0), 2),
        (
            [(1, 0), (-Fraction(1, 2), "0.866"), (-Fraction(1, 2), "-0.866")],
            (Fraction(11, 750000), 0),
            (1 - Fraction(11, 750000)) ** 2,
        ),
    ],
)
def test_circumcenter(points, center, squared_radius):
    ball = circumcenter_in_affine_hull(points)

    assert_equal(ball.center, center)
    assert_equal(ball.squared_radius, squared_radius)


def test_collinear_triple_has_no_circumcenter():
    assert_(circumcenter_in_affine_hull([(0, 0), (1, 0), (2, 0)]) is None)


def test_raises_duplicate_points():
    with assert_raises(ValueError):
        circumcenter_in_affine_hull([(0, 0), (1, 0), (0, 0)])

    with assert_raises(ValueError):
        kernel = Kernel(Mode.FLOAT)
        circumcenter_in_affine_hull([(0.0, 0.0), (0.0, 1e-15)], kernel)


@mark.parametrize("dim", [1, 2, 3])
def test_circumcenter_is_equidistant(dim: int):
    rng = rnd.default_rng(dim)

    for _ in range(50):
        points = _random_points(rng, dim, int(rng.integers(1, dim + 3)))
        ball = circumcenter_in_affine_hull(points)

        if ball is None:
            continue

        for point in points:
            assert_equal(squared_dist(point, ball.center), ball.squared_radius)


@mark.parametrize(
    "points, center, squared_radius",
    [
        ([(0, 0), (2, 0)], (1, 0), 1),
        ([(0, 0), (4, 0), (1, 1)], (2, 0), 4),
        ([(1, 0)], (1, 0), 0),
        (SQUARE, (0, 0), 2),
        (
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            (Fraction(3, 2), 0),
            Fraction(9, 4),
        ),
        ([(0, 0), (0, 0), (2, 0)], (1, 0), 1),
    ],
)
def test_min_enclosing_ball(points, center, squared_radius):
    ball = min_enclosing_ball(points)

    assert_equal(ball.center, center)
    assert_equal(ball.squared_radius, squared_radius)


def _brute_force_ball(points):
    """
    Smallest circumscribed ball of at most n + 1 points that encloses all
    points. The smallest enclosing ball is always of this form.
    """
    kernel = Kernel()
    best = None

    for size in range(1, len(points[0]) + 2):
        for subset in combinations(points, size):
            ball = circumcenter_in_affine_hull(subset)

            if ball is None:
                continue

            if all(ball.contains(point, kernel) for point in points):
                if best is None or ball.squared_radius < best.squared_radius:
                    best = ball

    return best


@mark.parametrize("dim", [1, 2, 3])
def test_min_enclosing_ball_is_smallest(dim: int):
    rng = rnd.default_rng(10 + dim)
    kernel = Kernel()

    for _ in range(30):
        points = _random_points(rng, dim, int(rng.integers(1, 7)))
        ball = min_enclosing_ball(points)

        assert_(all(ball.contains(point, kernel) for point in points))
        assert_(1 <= len(ball.support) <= dim + 1)
        assert_(all(ball.on_boundary(point, kernel) for point in ball.support))

        expected = _brute_force_ball(points)
        assert_equal(ball.center, expected.center)
        assert_equal(ball.squared_radius, expected.squared_radius)


def test_min_enclosing_ball_ignores_input_order():
    rng = rnd.default_rng(3)
    points = _random_points(rng, 2, 6)
    reordered = points[::-1]

    assert_equal(min_enclosing_ball(points), min_enclosing_ball(reordered))


def test_ball_validates_radius():
    with assert_raises(ValueError):
        Ball((0, 0), -1)


@mark.parametrize(
    "points, subset, expected",
    [
        (SQUARE, [0, 1], True),  # adjacent corners
        (SQUARE, [0, 3], True),  # diagonal: only the circumcircle is empty
        (SQUARE, [0, 1, 2, 3], True),
        ([(0, 0), (1, 0), (2, 0)], [0, 2], False),
        ([(0, 0), (1, 0), (2, 0)], [0, 1, 2], False),
        ([(0, 0), (4, 0), (2, 1), (2, -1)], [0, 1], False),
        ([(0, 0), (4, 0), (2, 3)], [0, 1], True),
    ],
)
def test_has_empty_sphere(points, subset, expected):
    assert_equal(has_empty_sphere(points, subset), expected)
