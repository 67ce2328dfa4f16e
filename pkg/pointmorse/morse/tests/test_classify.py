from fractions import Fraction

from numpy.testing import assert_, assert_equal
from pytest import mark

from pointmorse import Kernel, Mode
from pointmorse.linalg import dot, sub
from pointmorse.morse import Kind, PointCloud, classify
from pointmorse.tests.clouds import EQUILATERAL, PAIR, SINGLE, SQUARE, WEDGE


@mark.parametrize(
    "points, z, kind, index",
    [
        (PAIR, (0, 0), Kind.CRITICAL, 1),
        (EQUILATERAL, (0, 0), Kind.CRITICAL, 2),
        (SQUARE, (0, 0), Kind.CRITICAL, 2),
        (SQUARE, (1, 0), Kind.CRITICAL, 1),
        (SINGLE, (5, 5), Kind.MIN, 0),
        (WEDGE, (0, 0), Kind.REGULAR_CERTIFICATE, None),
        (PAIR, (0, 1), Kind.REGULAR_NONCRITICAL, None),
        ([(0, 0, 0), (2, 0, 0)], (1, 0, 0), Kind.CRITICAL, 1),
    ],
)
def test_examples(points, z, kind, index):
    res = classify(PointCloud(points), z)

    assert_equal(res.kind, kind)
    assert_equal(res.index, index)


def test_decimal_triangle_at_its_circumcenter():
    """
    The triangle with decimal coordinates (-1/2, +-0.866) is not exactly
    equilateral; its circumcenter is at (11/750000, 0), where it has a
    critical point of index two. The origin is not critical.
    """
    cloud = PointCloud([(1, 0), ("-0.5", "0.866"), ("-0.5", "-0.866")])

    res = classify(cloud, (Fraction(11, 750000), 0))
    assert_equal(res.kind, Kind.CRITICAL)
    assert_equal(res.index, 2)

    res = classify(cloud, (0, 0))
    assert_equal(res.kind, Kind.REGULAR_NONCRITICAL)


def test_regular_certificate():
    cloud = PointCloud(WEDGE)
    res = classify(cloud, (0, 0))
    v = res.certificate

    assert_(not res.is_topological_critical)
    assert_(res.is_differential_critical)
    assert_(any(a != 0 for a in v))
    assert_equal(v[0], 0)
    assert_(v[1] < 0)

    for point in cloud:
        assert_(dot(v, sub(point, (0, 0))) <= 0)


def test_critical_margin():
    res = classify(PointCloud(SQUARE), (0, 0))

    assert_equal(res.margin, Fraction(1, 4))
    assert_(res.is_topological_critical)


def test_noncritical_gradient():
    res = classify(PointCloud(PAIR), (0, 1))

    assert_equal(res.gradient, (0, 1))
    assert_(not res.is_differential_critical)


@mark.parametrize(
    "points, z, index",
    [
        (PAIR, (0, 0), 1),
        (SQUARE, (0, 0), 2),
        (SQUARE, (1, 0), 1),
    ],
)
def test_float_examples(points, z, index):
    cloud = PointCloud(points, Kernel(Mode.FLOAT))
    res = classify(cloud, tuple(float(a) for a in z))

    assert_equal(res.kind, Kind.CRITICAL)
    assert_equal(res.index, index)
