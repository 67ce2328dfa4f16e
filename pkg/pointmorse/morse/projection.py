from typing import Sequence, Union

import numpy as np

from pointmorse.linalg.scalars import Scalar
from pointmorse.linalg.vectors import squared_dist
from pointmorse.morse.PointCloud import PointCloud
from pointmorse.morse.ProjectionRecord import ProjectionRecord


def projection_set(
    cloud: PointCloud, z: Sequence[Union[Scalar, int, str]]
) -> ProjectionRecord:
    """
    Computes the set of cloud points nearest to ``z``, and their squared
    distance. In exact mode the minimum and its argmin set are exact; in
    float mode squared distances within the kernel's relative tolerance of the
    minimum count as ties.

    Parameters
    ----------
    cloud
        The point cloud.
    z
        Query point of the cloud's ambient dimension.

    Raises
    ------
    ValueError
        When ``z`` is not of the cloud's dimension.

    Returns
    -------
    ProjectionRecord
        Sorted indices of the nearest points, and their squared distance.
    """
    kernel = cloud.kernel
    z = _as_point(cloud, z)
    distances = [squared_dist(point, z) for point in cloud]
    best = min(distances)

    indices = tuple(
        idx
        for idx, dist in enumerate(distances)
        if kernel.compare(dist, best) == 0
    )

    return ProjectionRecord(indices, best)


def squared_distance(cloud: PointCloud, z: Sequence[Scalar]) -> Scalar:
    """
    The squared distance from ``z`` to the cloud, in the cloud's mode.
    """
    z = _as_point(cloud, z)
    return min(squared_dist(point, z) for point in cloud)


def distance(
    cloud: PointCloud, z: Union[Sequence[float], np.ndarray]
) -> Union[float, np.ndarray]:
    """
    Float evaluation of the distance function. Accepts a single point, or an
    array of points whose last axis is the ambient dimension; the result then
    has the array's leading shape.
    """
    points = cloud.to_numpy()
    z = np.asarray(z, dtype=float)

    if z.shape[-1] != cloud.ambient:
        raise ValueError(
            f"Points of dimension {z.shape[-1]} not understood, expected "
            f"{cloud.ambient}."
        )

    diff = z[..., np.newaxis, :] - points
    dist = np.sqrt(np.min(np.sum(diff**2, axis=-1), axis=-1))
    return float(dist) if dist.ndim == 0 else dist


def _as_point(cloud: PointCloud, z: Sequence[Scalar]):
    z = cloud.kernel.vector(z)

    if len(z) != cloud.ambient:
        raise ValueError(
            f"Point of dimension {len(z)} not understood, expected "
            f"{cloud.ambient}."
        )

    return z
