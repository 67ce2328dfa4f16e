import logging
from typing import Optional, Sequence

from pointmorse.Kernel import Kernel
from pointmorse.geometry.HullMembership import HullMembership
from pointmorse.geometry._validation import check_points
from pointmorse.linalg.scalars import Scalar
from pointmorse.lp import LinearProgram, solve_lp

logger = logging.getLogger(__name__)


def conv_contains(
    points: Sequence[Sequence[Scalar]],
    z: Sequence[Scalar],
    kernel: Optional[Kernel] = None,
) -> HullMembership:
    """
    Decides whether ``z`` lies in the convex hull of the given points, by
    solving the feasibility program

        lambda >= 0,  sum_i lambda_i = 1,  sum_i lambda_i x_i = z.

    Points on the boundary of the hull are inside.

    Parameters
    ----------
    points
        Nonempty sequence of points spanning the hull.
    z
        Query point, of the same dimension as the points.
    kernel
        Optional number kernel. Exact when not passed.

    Raises
    ------
    ValueError
        When the points are empty or their dimensions do not match ``z``.

    Returns
    -------
    HullMembership
        Membership, with convex coefficients when ``z`` is inside.
    """
    if kernel is None:
        kernel = Kernel()

    dim = check_points(points, len(z))
    num_points = len(points)

    constraints = [
        ([point[k] for point in points], "==", z[k]) for k in range(dim)
    ]
    constraints.append(([1] * num_points, "==", 1))

    lp = LinearProgram([0] * num_points, constraints)
    res = solve_lp(lp, kernel)

    if not res.is_optimal:
        logger.debug(f"{z} outside the hull of {num_points} points.")
        return HullMembership(False)

    return HullMembership(True, res.primal)
