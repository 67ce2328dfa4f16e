import logging
from typing import List, Optional, Sequence

from pointmorse.Kernel import Kernel
from pointmorse.geometry.MinNormPoint import MinNormPoint
from pointmorse.geometry._validation import check_points
from pointmorse.linalg import add, combine, dot, solve_linear, sub
from pointmorse.linalg.scalars import Scalar, Vector

logger = logging.getLogger(__name__)


def min_norm_point(
    points: Sequence[Sequence[Scalar]],
    z: Sequence[Scalar],
    kernel: Optional[Kernel] = None,
    max_iterations: int = 10_000,
) -> MinNormPoint:
    """
    Computes the point of the convex hull of ``points`` nearest to ``z``,
    using Wolfe's min-norm-point algorithm on the shifted points
    :math:`x_i - z`.

    The algorithm keeps a *corral*: an affinely independent subset of the
    points whose affine hull contains the current iterate. Each major cycle
    adds the point minimising the inner product with the iterate; minor
    cycles move towards the affine minimiser of the corral, dropping points
    whose weights vanish, until the minimiser lies in the corral's relative
    interior. Ties are broken by the smallest index, so the result is
    deterministic. Over the rationals the algorithm terminates with the
    exact minimiser.

    Parameters
    ----------
    points
        Nonempty sequence of points spanning the hull.
    z
        Query point.
    kernel
        Optional number kernel. Exact when not passed.
    max_iterations
        Bound on the total number of (major and minor) cycles. Only reachable
        in float mode, where tolerances can stall the corral updates.

    Raises
    ------
    RuntimeError
        When the iteration bound is reached.

    Returns
    -------
    MinNormPoint
        The nearest point, its convex coefficients and their support.

    References
    ----------
    .. [1] Wolfe, P. (1976). Finding the nearest point in a polytope.
           *Mathematical Programming*, 11: 128 - 149.
    """
    if kernel is None:
        kernel = Kernel()

    check_points(points, len(z))

    z = kernel.vector(z)
    shifted = [sub(kernel.vector(point), z) for point in points]
    norms = [dot(point, point) for point in shifted]
    scale = max(norms)

    first = min(range(len(shifted)), key=lambda idx: (norms[idx], idx))
    corral: List[int] = [first]
    weights: List[Scalar] = [kernel.one]
    current = shifted[first]

    for iteration in range(max_iterations):
        current_norm = dot(current, current)

        if kernel.is_zero(current_norm, scale):
            break

        # Major cycle: the point with smallest inner product against the
        # iterate improves on it unless the iterate is already optimal.
        products = [dot(point, current) for point in shifted]
        entering = min(range(len(shifted)), key=lambda i: (products[i], i))

        if kernel.compare(products[entering], current_norm) >= 0:
            break

        if entering in corral:
            logger.warning("Wolfe's method selected a point in the corral.")
            break

        corral.append(entering)
        weights.append(kernel.zero)

        # Minor cycles.
        while True:
            alpha = _affine_minimiser([shifted[idx] for idx in corral], kernel)

            if all(kernel.sign(a, 1) > 0 for a in alpha):
                weights = alpha
                break

            theta = min(
                lam / (lam - a) if lam != a else kernel.zero
                for lam, a in zip(weights, alpha)
                if kernel.sign(a, 1) <= 0
            )

            weights = [
                theta * a + (1 - theta) * lam for a, lam in zip(alpha, weights)
            ]

            keep = [kernel.sign(w, 1) > 0 for w in weights]
            corral = [idx for idx, kept in zip(corral, keep) if kept]
            weights = [w for w, kept in zip(weights, keep) if kept]

        total = sum(weights, kernel.zero)
        weights = [w / total for w in weights]
        current = combine(weights, [shifted[idx] for idx in corral])
    else:
        raise RuntimeError(
            f"Min-norm point not found in {max_iterations} iterations."
        )

    logger.debug(f"Min-norm point found after {iteration} major cycles.")

    coefficients = [kernel.zero] * len(points)

    for idx, weight in zip(corral, weights):
        coefficients[idx] = weight

    return MinNormPoint(
        point=add(current, z),
        coefficients=tuple(coefficients),
        support=tuple(sorted(corral)),
    )


def _affine_minimiser(corral: List[Vector], kernel: Kernel) -> List[Scalar]:
    """
    Weights ``alpha`` summing to one that minimise the norm of the affine
    combination of the (affinely independent) corral points. These solve the
    system ``G alpha + mu 1 = 0, 1^T alpha = 1``, with ``G`` the Gram matrix.
    """
    size = len(corral)
    matrix = [
        [dot(first, second) for second in corral] + [kernel.one]
        for first in corral
    ]
    matrix.append([kernel.one] * size + [kernel.zero])
    rhs = [kernel.zero] * size + [kernel.one]

    solution = solve_linear(matrix, rhs, kernel)

    if solution is None:
        raise RuntimeError("Affinely dependent corral not understood.")

    return list(solution[:size])
