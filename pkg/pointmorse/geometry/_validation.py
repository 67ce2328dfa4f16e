from typing import Optional, Sequence

from pointmorse.linalg.scalars import Scalar


def check_points(
    points: Sequence[Sequence[Scalar]], dim: Optional[int] = None
) -> int:
    """
    Checks that the points are nonempty and share a dimension (equal to
    ``dim``, if passed). Returns that dimension.
    """
    if len(points) == 0:
        raise ValueError("Empty point set not understood.")

    if dim is None:
        dim = len(points[0])

    if any(len(point) != dim for point in points):
        raise ValueError(f"Points not of dimension {dim} not understood.")

    return dim
