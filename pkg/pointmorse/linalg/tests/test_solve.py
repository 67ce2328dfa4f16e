from fractions import Fraction

import numpy.random as rnd
from numpy.testing import assert_, assert_allclose, assert_equal, assert_raises

from pointmorse import Kernel, Mode
from pointmorse.linalg import solve_linear


def frac_matrix(rows):
    return [[Fraction(a) for a in row] for row in rows]


def test_diagonal():
    solution = solve_linear(frac_matrix([[2, 0], [0, 2]]), [2, 4], Kernel())
    assert_equal(solution, (1, 2))


def test_underdetermined_returns_some_solution():
    solution = solve_linear(frac_matrix([[1, 1]]), [3], Kernel())

    assert_(solution is not None)
    assert_equal(solution[0] + solution[1], 3)


def test_inconsistent():
    assert_(solve_linear(frac_matrix([[1], [1]]), [0, 1], Kernel()) is None)


def test_raises_dimension_mismatch():
    with assert_raises(ValueError):
        solve_linear(frac_matrix([[1, 0], [0, 1]]), [1], Kernel())

    with assert_raises(ValueError):
        solve_linear([[1, 0], [1]], [1, 1], Kernel())


def test_solutions_satisfy_system():
    """
    Whenever a solution is returned it satisfies the system exactly in exact
    mode, and within 1e-9 (1 + |b|) in float mode.
    """
    rng = rnd.default_rng(3)

    for _ in range(200):
        num_rows, num_cols = rng.integers(1, 5, size=2)
        matrix = rng.integers(-3, 4, size=(num_rows, num_cols))
        rhs = rng.integers(-5, 6, size=num_rows)

        exact = solve_linear(
            frac_matrix(matrix.tolist()), rhs.tolist(), Kernel()
        )
        floating = solve_linear(
            matrix.astype(float).tolist(),
            rhs.astype(float).tolist(),
            Kernel(Mode.FLOAT),
        )

        assert_equal(exact is None, floating is None)

        if exact is not None:
            for row, b in zip(matrix.tolist(), rhs.tolist()):
                assert_equal(sum(a * x for a, x in zip(row, exact)), b)

            residual = matrix @ floating - rhs
            tolerance = 1e-9 * (1 + abs(rhs).max())
            assert_allclose(residual, 0, atol=tolerance)
