from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from pointmorse.Kernel import Kernel
from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.linalg.vectors import squared_dist, squared_norm


class PointCloud:
    """
    A finite, ordered set of pairwise distinct points in :math:`R^n`, with
    the number kernel its geometry is computed in.

    Parameters
    ----------
    points
        Nonempty sequence of points of a common dimension ``n >= 1``.
        Coordinates may be numbers or numeric literals, and are converted
        into the kernel's mode.
    kernel
        Optional number kernel. Exact when not passed.

    Raises
    ------
    ValueError
        When the points are empty, of zero or differing dimensions, or not
        pairwise distinct (exactly in exact mode, up to the kernel tolerance
        on squared distances in float mode).
    """

    def __init__(
        self,
        points: Sequence[Sequence[Union[Scalar, int, str]]],
        kernel: Optional[Kernel] = None,
    ):
        if kernel is None:
            kernel = Kernel()

        if len(points) == 0:
            raise ValueError("Empty point cloud not understood.")

        ambient = len(points[0])

        if ambient == 0:
            raise ValueError("Zero-dimensional points not understood.")

        if any(len(point) != ambient for point in points):
            raise ValueError("Points of different dimensions not understood.")

        self._kernel = kernel
        self._points = tuple(kernel.vector(point) for point in points)
        self._ambient = ambient

        duplicates = self.duplicates()

        if duplicates:
            raise ValueError(f"Duplicate points at indices {duplicates}.")

    @property
    def points(self) -> Tuple[Vector, ...]:
        return self._points

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def kernel(self) -> Kernel:
        return self._kernel

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, idx: int) -> Vector:
        return self._points[idx]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self._points)

    def __repr__(self) -> str:
        return f"PointCloud({len(self)} points in R^{self._ambient})"

    def duplicates(self) -> Tuple[Tuple[int, int], ...]:
        """
        Index pairs ``(i, j)``, ``i < j``, of coinciding points.
        """
        return coinciding_pairs(self._points, self._kernel)

    def index_of(self, z: Sequence[Scalar]) -> Optional[int]:
        """
        Index of the cloud point coinciding with ``z``, or None when ``z`` is
        not a point of the cloud.
        """
        z = self._kernel.vector(z)

        if len(z) != self._ambient:
            raise ValueError(
                f"Point of dimension {len(z)} not understood, expected "
                f"{self._ambient}."
            )

        for idx, point in enumerate(self._points):
            if _coincide(point, z, self._kernel):
                return idx

        return None

    def to_numpy(self) -> np.ndarray:
        """
        The points as a float array of shape ``(len(self), ambient)``.
        """
        return np.array(self._points, dtype=float)


def coinciding_pairs(
    points: Sequence[Vector], kernel: Kernel
) -> Tuple[Tuple[int, int], ...]:
    """
    Index pairs ``(i, j)``, ``i < j``, of coinciding points: equal points in
    exact mode, points whose squared distance is zero up to the kernel
    tolerance in float mode. Pairs are ordered by ``i``, then by ``j``.
    """
    if kernel.is_exact:
        first = {}
        pairs = []

        for idx, point in enumerate(points):
            if point in first:
                pairs.append((first[point], idx))
            else:
                first[point] = idx

        return tuple(sorted(pairs))

    return tuple(
        (i, j)
        for i in range(len(points))
        for j in range(i + 1, len(points))
        if _coincide(points[i], points[j], kernel)
    )


def _coincide(first: Vector, second: Vector, kernel: Kernel) -> bool:
    if kernel.is_exact:
        return first == second

    scale = max(squared_norm(first), squared_norm(second))
    return kernel.is_zero(squared_dist(first, second), scale)
