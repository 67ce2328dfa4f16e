from collections import Counter
from fractions import Fraction

import numpy.random as rnd
from numpy.testing import assert_, assert_equal, assert_raises
from pytest import mark

from pointmorse import Kernel, Mode
from pointmorse.morse import (
    CriticalPointRecord,
    Kind,
    PointCloud,
    classify,
    critical_values,
    enumerate_critical,
    euler_characteristic,
    probe_local_model,
    projection_set,
)
from pointmorse.tests.clouds import (
    FIXTURES,
    Collinear,
    Equilateral,
    Pair,
    Single,
    Square,
    Wedge,
    random_cloud,
)


def _summary(records):
    return [
        (record.location, record.squared_value, record.kind, record.index)
        for record in records
    ]


def test_square():
    records = enumerate_critical(Square())

    assert_equal(
        _summary(records),
        [
            ((-1, -1), 0, Kind.MIN, 0),
            ((-1, 1), 0, Kind.MIN, 0),
            ((1, -1), 0, Kind.MIN, 0),
            ((1, 1), 0, Kind.MIN, 0),
            ((-1, 0), 1, Kind.CRITICAL, 1),
            ((0, -1), 1, Kind.CRITICAL, 1),
            ((0, 1), 1, Kind.CRITICAL, 1),
            ((1, 0), 1, Kind.CRITICAL, 1),
            ((0, 0), 2, Kind.CRITICAL, 2),
        ],
    )

    assert_equal(records[-1].projection.indices, (0, 1, 2, 3))


def test_collinear():
    records = enumerate_critical(Collinear())
    critical = [r for r in records if r.kind == Kind.CRITICAL]

    assert_equal(len(records), 7)
    assert_equal(Counter(r.index for r in records), {0: 4, 1: 3})
    assert_equal(
        [r.location for r in critical],
        [(Fraction(1, 2), 0), (Fraction(3, 2), 0), (Fraction(5, 2), 0)],
    )


def test_wedge_includes_regular_differential_critical_point():
    records = enumerate_critical(Wedge())
    half = Fraction(1, 2)

    assert_equal(
        _summary(records),
        [
            ((-1, 0), 0, Kind.MIN, 0),
            ((0, 1), 0, Kind.MIN, 0),
            ((1, 0), 0, Kind.MIN, 0),
            ((-half, half), half, Kind.CRITICAL, 1),
            ((half, half), half, Kind.CRITICAL, 1),
            ((0, 0), 1, Kind.REGULAR_CERTIFICATE, None),
        ],
    )


def test_pair_equilateral_and_single():
    assert_equal(
        [(r.kind, r.index) for r in enumerate_critical(Pair())],
        [(Kind.MIN, 0), (Kind.MIN, 0), (Kind.CRITICAL, 1)],
    )

    records = enumerate_critical(Equilateral())
    assert_equal(Counter(r.index for r in records), {0: 3, 1: 3, 2: 1})
    assert_equal(records[-1].location, (0, 0))
    assert_equal(records[-1].squared_value, 1)

    records = enumerate_critical(Single())
    assert_equal(_summary(records), [((5, 5), 0, Kind.MIN, 0)])


def test_raises_above_point_cap():
    cloud = PointCloud([(idx, idx * idx) for idx in range(26)])

    with assert_raises(ValueError):
        enumerate_critical(cloud)

    with assert_raises(ValueError):
        enumerate_critical(Square(), max_subset_size=0)


def test_max_subset_size_truncates():
    records = enumerate_critical(Square(), max_subset_size=3)

    # The center needs all four corners, so it is not found.
    assert_equal(Counter(r.index for r in records), {0: 4, 1: 4})

    # Collinear critical points have two nearest points, so pairs suffice.
    # The subset size also lifts the cap on the number of points.
    records = enumerate_critical(Collinear(), max_subset_size=2, max_points=3)
    assert_equal(len(records), 7)
    assert_equal(euler_characteristic(records), 1)

    with assert_raises(ValueError):
        enumerate_critical(Collinear(), max_points=3)


@mark.parametrize("dim", [2, 3])
def test_morse_euler_identity(dim: int):
    rng = rnd.default_rng(dim)

    for _ in range(25):
        cloud = random_cloud(rng, dim, int(rng.integers(1, 8)))
        records = enumerate_critical(cloud)

        assert_equal(euler_characteristic(records), 1)

        for record in records:
            if record.kind == Kind.CRITICAL:
                assert_(1 <= record.index <= dim)


def test_records_sorted_and_distinct():
    rng = rnd.default_rng(0)
    cloud = random_cloud(rng, 2, 7)
    records = enumerate_critical(cloud)
    keys = [record.sort_key() for record in records]

    assert_equal(keys, sorted(keys))
    assert_equal(len({r.location for r in records}), len(records))


def test_records_agree_with_classify():
    rng = rnd.default_rng(1)
    cloud = random_cloud(rng, 3, 6)

    for record in enumerate_critical(cloud):
        assert_equal(classify(cloud, record.location), record.classification)


def test_critical_values():
    records = enumerate_critical(Wedge())

    assert_equal(critical_values(records), [0, Fraction(1, 2)])
    assert_equal(
        critical_values(records, topological=False), [0, Fraction(1, 2), 1]
    )


def _transform(rng, dim: int):
    """
    Random map composed of a coordinate permutation, sign flips, a rational
    translation and a positive rational scaling. Returns the map and the
    scaling factor.
    """
    perm = rng.permutation(dim)
    signs = rng.choice([-1, 1], size=dim)
    shift = [Fraction(int(a), int(b)) for a, b in zip(
        rng.integers(-5, 6, dim), rng.integers(1, 4, dim)
    )]
    factor = Fraction(int(rng.integers(1, 6)), int(rng.integers(1, 6)))

    def apply(point):
        return tuple(
            factor * int(signs[k]) * point[int(perm[k])] + shift[k]
            for k in range(dim)
        )

    return apply, factor


def test_invariance_under_similarities():
    rng = rnd.default_rng(2024)

    for _ in range(20):
        dim = int(rng.integers(2, 4))
        cloud = random_cloud(rng, dim, int(rng.integers(2, 6)))
        records = enumerate_critical(cloud)

        for _ in range(5):
            apply, factor = _transform(rng, dim)
            moved = PointCloud([apply(point) for point in cloud])

            expected = {
                (
                    apply(r.location),
                    factor**2 * r.squared_value,
                    r.kind,
                    r.index,
                )
                for r in records
            }
            actual = {
                (r.location, r.squared_value, r.kind, r.index)
                for r in enumerate_critical(moved)
            }

            assert_equal(actual, expected)


def _generic_cloud(rng, size: int):
    """
    Random float cloud whose pairwise squared distances are separated by more
    than 1e-3, with its exact counterpart.
    """
    while True:
        points = [tuple(rng.uniform(-3, 3, size=2)) for _ in range(size)]
        squared = sorted(
            (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
            for idx, p in enumerate(points)
            for q in points[idx + 1 :]
        )

        if all(b - a > 1e-3 for a, b in zip(squared, squared[1:])):
            exact = PointCloud(points)
            approx = PointCloud(points, Kernel(Mode.FLOAT))
            return exact, approx


def test_float_and_exact_modes_agree():
    rng = rnd.default_rng(3)

    for _ in range(10):
        exact, approx = _generic_cloud(rng, 5)

        expected = Counter(
            (r.kind, r.index) for r in enumerate_critical(exact)
        )
        actual = Counter((r.kind, r.index) for r in enumerate_critical(approx))

        assert_equal(actual, expected)


@mark.parametrize("fixture", FIXTURES)
def test_local_models(fixture):
    cloud = fixture()

    for record in enumerate_critical(cloud):
        assert_(probe_local_model(cloud, record))


def test_local_model_of_noncritical_point():
    cloud = Pair()
    record = CriticalPointRecord(
        location=(0, 1),
        squared_value=2,
        projection=projection_set(cloud, (0, 1)),
        classification=classify(cloud, (0, 1)),
    )

    assert_equal(record.kind, Kind.REGULAR_NONCRITICAL)
    assert_(probe_local_model(cloud, record))
