import logging
from typing import List, Optional, Sequence

from pointmorse.Kernel import Kernel
from pointmorse.geometry.Ball import Ball
from pointmorse.geometry._validation import check_points
from pointmorse.linalg import combine, dot, solve_linear, squared_norm, sub
from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.linalg.vectors import add
from pointmorse.lp import LinearProgram, solve_lp

logger = logging.getLogger(__name__)


def circumcenter_in_affine_hull(
    points: Sequence[Sequence[Scalar]], kernel: Optional[Kernel] = None
) -> Optional[Ball]:
    R"""
    Finds the point :math:`c` in the affine hull of the given points that is
    equidistant from all of them. Writing :math:`d_j = x_j - x_0` and
    :math:`c = x_0 + \sum_j \mu_j d_j`, the bisector conditions become the
    Gram system :math:`2 \sum_j \mu_j \langle d_j, d_i \rangle = |d_i|^2`.
    Affinely dependent points are allowed: the system is then singular, but
    any solution gives the same center.

    Parameters
    ----------
    points
        Nonempty sequence of pairwise distinct points.
    kernel
        Optional number kernel. Exact when not passed.

    Raises
    ------
    ValueError
        When the points are empty, of different dimensions, or not pairwise
        distinct.

    Returns
    -------
    Optional[Ball]
        The ball centered at :math:`c` with all points on its boundary, or
        None when no equidistant point exists (for example, for three
        distinct collinear points).
    """
    if kernel is None:
        kernel = Kernel()

    check_points(points)
    points = [kernel.vector(point) for point in points]

    if not kernel.is_exact:
        # Pairwise distinctness up to tolerance, as for point clouds.
        scale = max(squared_norm(point) for point in points)
        distinct = all(
            not kernel.is_zero(squared_norm(sub(p, q)), scale)
            for idx, p in enumerate(points)
            for q in points[idx + 1 :]
        )
    else:
        distinct = len(set(points)) == len(points)

    if not distinct:
        raise ValueError("Duplicate points not understood.")

    origin = points[0]
    diffs = [sub(point, origin) for point in points[1:]]

    if not diffs:
        return Ball(origin, kernel.zero, (origin,))

    gram = [[2 * dot(first, second) for second in diffs] for first in diffs]
    rhs = [squared_norm(diff) for diff in diffs]
    weights = solve_linear(gram, rhs, kernel)

    if weights is None:
        return None

    offset = combine(weights, diffs)
    return Ball(add(origin, offset), squared_norm(offset), tuple(points))


def min_enclosing_ball(
    points: Sequence[Sequence[Scalar]], kernel: Optional[Kernel] = None
) -> Ball:
    """
    Computes the smallest ball enclosing the given points with Welzl's
    recursion, in the move-to-front variant. The input order is processed
    deterministically (no shuffling), so equal inputs give equal balls. In
    exact mode the center and squared radius are exact: each candidate ball
    is the circumscribed ball of a support set, found by solving a rational
    linear system.

    Parameters
    ----------
    points
        Nonempty sequence of points. Duplicates are allowed.
    kernel
        Optional number kernel. Exact when not passed.

    Returns
    -------
    Ball
        The smallest enclosing ball. Its support holds at most ``n + 1``
        points on the boundary that determine it.

    References
    ----------
    .. [1] Welzl, E. (1991). Smallest enclosing disks (balls and ellipsoids).
           In *New Results and New Trends in Computer Science*, LNCS 555,
           359 - 370.
    .. [2] Gärtner, B. (1999). Fast and robust smallest enclosing balls. In
           *Algorithms - ESA '99*, LNCS 1643, 325 - 338.
    """
    if kernel is None:
        kernel = Kernel()

    dim = check_points(points)
    order = [kernel.vector(point) for point in points]
    ball = _move_to_front(order, len(order), [], dim, kernel)

    logger.debug(
        f"Enclosing ball of {len(order)} points has {len(ball.support)} "
        "support points."
    )

    return ball


def _move_to_front(
    order: List[Vector],
    end: int,
    boundary: List[Vector],
    dim: int,
    kernel: Kernel,
) -> Optional[Ball]:
    """
    Smallest ball enclosing ``order[:end]`` with all ``boundary`` points on
    its boundary. Points found outside the current ball are moved to the
    front of ``order``, so later calls see them first.
    """
    ball = _boundary_ball(boundary, kernel)

    if len(boundary) == dim + 1:
        return ball

    for idx in range(end):
        point = order[idx]

        if ball is not None and ball.contains(point, kernel):
            continue

        ball = _move_to_front(order, idx, boundary + [point], dim, kernel)
        order.insert(0, order.pop(idx))

    return ball


def _boundary_ball(boundary: List[Vector], kernel: Kernel) -> Optional[Ball]:
    if not boundary:
        return None

    ball = circumcenter_in_affine_hull(boundary, kernel)

    if ball is None:
        raise RuntimeError(f"Support set {boundary} has no circumcenter.")

    return ball


def has_empty_sphere(
    points: Sequence[Sequence[Scalar]],
    subset: Sequence[int],
    kernel: Optional[Kernel] = None,
) -> bool:
    R"""
    Decides whether some sphere passes through all points indexed by
    ``subset`` while no point of ``points`` lies strictly inside it. With
    :math:`s = r^2 - |c|^2`, a point :math:`x` lies on the sphere with
    center :math:`c` and squared radius :math:`r^2` when
    :math:`|x|^2 - 2 \langle c, x \rangle = s`, and outside or on it when
    the left-hand side is at least :math:`s`. The question is thus a linear
    feasibility program in the free variables :math:`(c, s)`.

    If a set of points has no such sphere, neither has any superset, and no
    point of space has a nearest-point set containing it.

    Parameters
    ----------
    points
        All points, of a common dimension.
    subset
        Indices of the points required on the sphere. Nonempty.
    kernel
        Optional number kernel. Exact when not passed.

    Returns
    -------
    bool
        Whether an empty sphere through the indexed points exists.
    """
    if kernel is None:
        kernel = Kernel()

    dim = check_points(points)

    if not subset:
        raise ValueError("Empty subset not understood.")

    chosen = set(subset)
    constraints = []

    for idx, point in enumerate(points):
        point = kernel.vector(point)
        row = [-2 * coord for coord in point] + [-kernel.one]
        relation = "==" if idx in chosen else ">="
        constraints.append((row, relation, -squared_norm(point)))

    lp = LinearProgram([0] * (dim + 1), constraints, [None] * (dim + 1))
    return solve_lp(lp, kernel).is_optimal
