from dataclasses import dataclass
from typing import Tuple

from pointmorse.linalg.scalars import Vector


@dataclass(frozen=True)
class MinNormPoint:
    """
    The point of a convex hull nearest to a query point.

    Attributes
    ----------
    point
        The nearest point of the hull.
    coefficients
        Convex weights, one per generator of the hull, realising ``point``.
    support
        Sorted indices of the generators with nonzero weight.
    """

    point: Vector
    coefficients: Vector
    support: Tuple[int, ...]
