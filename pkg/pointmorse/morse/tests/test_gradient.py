from fractions import Fraction

import numpy as np
import numpy.random as rnd
from numpy.testing import assert_, assert_allclose, assert_equal, assert_raises
from pytest import mark

from pointmorse import Kernel, Mode
from pointmorse.geometry import conv_contains
from pointmorse.linalg import squared_norm
from pointmorse.morse import (
    Kind,
    PointCloud,
    clarke_generators,
    clarke_min_norm_element,
    distance,
    enumerate_critical,
    generalized_gradient,
    projection_set,
)
from pointmorse.tests.clouds import PAIR, SQUARE, WEDGE, random_cloud


def test_radial_gradient():
    res = generalized_gradient(PointCloud([(0, 0)]), (3, 4))

    assert_equal(res.sigma, (0, 0))
    assert_equal(res.unnormalized, (3, 4))
    assert_equal(res.squared_value, 25)
    assert_allclose(res.normalized, [0.6, 0.8])


def test_gradient_between_two_points():
    res = generalized_gradient(PointCloud(PAIR), (0, 1))

    assert_equal(res.sigma, (0, 0))
    assert_equal(res.unnormalized, (0, 1))
    assert_equal(res.projection.indices, (0, 1))
    assert_allclose(res.normalized, [0, 1 / np.sqrt(2)])


def test_gradient_vanishes_inside_hull():
    res = generalized_gradient(PointCloud(WEDGE), (0, 0))

    assert_(res.is_zero)
    assert_equal(res.sigma, (0, 0))
    assert_allclose(res.normalized, [0, 0])


def test_gradient_vanishes_at_cloud_points():
    res = generalized_gradient(PointCloud(SQUARE), (1, -1))

    assert_(res.is_zero)
    assert_equal(res.projection.indices, (1,))
    assert_equal(res.squared_value, 0)
    assert_allclose(res.normalized, [0, 0])


def test_gradient_outside_square():
    res = generalized_gradient(PointCloud(SQUARE), (3, 0))

    assert_equal(res.projection.indices, (0, 1))
    assert_equal(res.sigma, (1, 0))
    assert_allclose(res.normalized, [2 / np.sqrt(5), 0])
    assert_allclose(res.normalized / np.linalg.norm(res.normalized), [1, 0])


@mark.parametrize("seed", range(3))
def test_gradient_norm_bound(seed: int):
    """
    The generalised gradient has norm at most one, with equality exactly when
    sigma is one of the nearest points. Also, it vanishes away from the cloud
    exactly when z lies in the convex hull of its nearest points.
    """
    rng = rnd.default_rng(seed)

    for _ in range(30):
        cloud = random_cloud(rng, int(rng.integers(2, 4)), 5)
        z = tuple(
            Fraction(int(a), 2) for a in rng.integers(-8, 9, cloud.ambient)
        )

        res = generalized_gradient(cloud, z)
        norm = squared_norm(res.unnormalized)
        nearest = [cloud[idx] for idx in res.projection.indices]

        assert_(norm <= res.squared_value)
        assert_equal(norm == res.squared_value, res.sigma in nearest)

        if cloud.index_of(z) is None:
            inside = conv_contains(nearest, z).inside
            assert_equal(res.is_zero, inside)


def test_matches_finite_differences():
    rng = rnd.default_rng(42)
    cloud = random_cloud(rng, 2, 6, Mode.FLOAT)
    points = cloud.to_numpy()
    num_checked = 0

    while num_checked < 100:
        z = rng.uniform(-6, 6, size=2)
        dists = np.sort(np.linalg.norm(points - z, axis=1))

        if dists[1] - dists[0] < 1e-3:  # not a unique nearest neighbour
            continue

        gradient = generalized_gradient(cloud, z).normalized
        step = 1e-6

        for dim in range(2):
            offset = np.zeros(2)
            offset[dim] = step
            diff = distance(cloud, z + offset) - distance(cloud, z - offset)
            assert_(abs(diff / (2 * step) - gradient[dim]) < 1e-5)

        num_checked += 1


def test_exact_zero_gradient_at_differential_critical_points():
    rng = rnd.default_rng(5)
    num_checked = 0

    while num_checked < 100:
        cloud = random_cloud(rng, int(rng.integers(2, 4)), 6)

        for record in enumerate_critical(cloud):
            if record.kind == Kind.MIN:
                continue

            res = generalized_gradient(cloud, record.location)

            assert_(res.is_zero)
            assert_equal(res.projection, record.projection)
            num_checked += 1


@mark.parametrize(
    "points, z, generators, squared_length",
    [
        (PAIR, (0, 1), [(1, 1), (-1, 1)], 2),
        ([(0, 0)], (3, 4), [(3, 4)], 25),
        (SQUARE, (0, 0), [(-1, -1), (-1, 1), (1, -1), (1, 1)], 2),
    ],
)
def test_clarke_generators(points, z, generators, squared_length):
    res = clarke_generators(PointCloud(points), z)

    assert_equal(list(res.generators), generators)
    assert_equal(res.squared_length, squared_length)
    assert_allclose(np.linalg.norm(res.normalized, axis=1), 1.0)


def test_clarke_generators_raise_at_cloud_points():
    with assert_raises(ValueError):
        clarke_generators(PointCloud(SQUARE), (1, 1))


def test_clarke_min_norm_element_is_gradient():
    rng = rnd.default_rng(9)

    for _ in range(50):
        cloud = random_cloud(rng, 2, 5)
        z = tuple(Fraction(int(a), 3) for a in rng.integers(-12, 13, 2))

        if cloud.index_of(z) is not None:
            continue

        expected = generalized_gradient(cloud, z).unnormalized
        assert_equal(clarke_min_norm_element(cloud, z), expected)


def test_float_gradient():
    cloud = PointCloud(SQUARE, Kernel(Mode.FLOAT))
    res = generalized_gradient(cloud, (3.0, 0.0))

    assert_equal(projection_set(cloud, (3.0, 0.0)).indices, (0, 1))
    assert_allclose(res.normalized, [2 / np.sqrt(5), 0], atol=1e-12)
