import numpy as np
from numpy.testing import assert_, assert_equal, assert_raises
from pytest import mark

from pointmorse.offsets import SimplicialComplex

# Filled triangle, and its boundary.
DISK = [(0, 1), (0, 2), (1, 2), (0, 1, 2)]
CIRCLE = [(0, 1), (0, 2), (1, 2)]


def test_vertices_always_present():
    complex = SimplicialComplex(3)

    assert_equal(complex.simplices(0), [(0,), (1,), (2,)])
    assert_equal(complex.dimension, 0)
    assert_equal(len(complex), 3)


def test_simplices_are_sorted_by_dimension():
    complex = SimplicialComplex(3, reversed(DISK))

    assert_equal(complex.simplices(1), CIRCLE)
    assert_equal(complex.simplices(2), [(0, 1, 2)])
    assert_equal(list(complex)[3:], DISK)
    assert_equal(complex.dimension, 2)
    assert_equal(complex.max_dim, 3)


@mark.parametrize(
    "simplices, max_dim",
    [
        ([(1, 0)], None),  # unsorted
        ([(0, 0)], None),  # repeated vertex
        ([(0, 1), (0, 1)], None),  # listed twice
        ([(0, 3)], None),  # unknown vertex
        ([(0, 1, 2)], None),  # missing edges
        (DISK, 1),  # above max_dim
    ],
)
def test_raises_invalid_simplices(simplices, max_dim):
    with assert_raises(ValueError):
        SimplicialComplex(3, simplices, max_dim)


def test_raises_negative_vertex_count():
    with assert_raises(ValueError):
        SimplicialComplex(-1)


def test_boundary_matrix():
    complex = SimplicialComplex(3, DISK)

    assert_equal(complex.boundary_matrix(0).shape, (0, 3))
    assert_equal(
        complex.boundary_matrix(1),
        [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
    )
    assert_equal(complex.boundary_matrix(2), [[1], [1], [1]])
    assert_equal(complex.boundary_matrix(3).shape, (1, 0))
    assert_equal(complex.boundary_matrix(1).dtype, bool)


def test_boundary_of_boundary_vanishes():
    tetrahedron = [(0, 1, 2, 3)]
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    complex = SimplicialComplex(4, edges + faces + tetrahedron)

    for dim in range(1, 4):
        first = complex.boundary_matrix(dim).astype(int)
        second = complex.boundary_matrix(dim + 1).astype(int)
        assert_(not np.any((first @ second) % 2))


def test_euler_characteristic():
    assert_equal(SimplicialComplex(3, DISK).euler_characteristic(), 1)
    assert_equal(SimplicialComplex(3, CIRCLE).euler_characteristic(), 0)
    assert_equal(SimplicialComplex(5).euler_characteristic(), 5)


def test_is_subcomplex_of():
    disk = SimplicialComplex(3, DISK)
    circle = SimplicialComplex(3, CIRCLE)

    assert_(circle.is_subcomplex_of(disk))
    assert_(not disk.is_subcomplex_of(circle))
    assert_(SimplicialComplex(2).is_subcomplex_of(circle))
    assert_(not SimplicialComplex(4).is_subcomplex_of(circle))


def test_contains():
    complex = SimplicialComplex(3, CIRCLE)

    assert_((0, 2) in complex)
    assert_((2,) in complex)
    assert_((0, 1, 2) not in complex)
