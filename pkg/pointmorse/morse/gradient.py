from typing import Sequence

from pointmorse.geometry import min_norm_point
from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.linalg.vectors import sub
from pointmorse.morse.Gradient import ClarkeGenerators, Gradient
from pointmorse.morse.PointCloud import PointCloud
from pointmorse.morse.ProjectionRecord import ProjectionRecord
from pointmorse.morse.projection import projection_set


def generalized_gradient(cloud: PointCloud, z: Sequence[Scalar]) -> Gradient:
    R"""
    Computes the generalised gradient
    :math:`\nabla d(z) = (z - \sigma(z)) / d(z)` of the distance function,
    where :math:`\sigma(z)` is the point of the convex hull of the nearest
    cloud points closest to :math:`z`. At cloud points the gradient is zero.

    Parameters
    ----------
    cloud
        The point cloud.
    z
        The point to evaluate at.

    Returns
    -------
    Gradient
        The projection set, :math:`\sigma(z)`, the exact unnormalised vector
        :math:`z - \sigma(z)` and the squared distance. The normalised float
        gradient is available through :attr:`Gradient.normalized`.
    """
    kernel = cloud.kernel
    z = kernel.vector(z)
    idx = cloud.index_of(z)

    if idx is not None:
        projection = ProjectionRecord((idx,), kernel.zero)
        zero = tuple(kernel.zero for _ in z)
        return Gradient(projection, z, zero, kernel.zero)

    projection = projection_set(cloud, z)
    nearest = [cloud[idx] for idx in projection.indices]
    sigma = min_norm_point(nearest, z, kernel).point

    return Gradient(projection, sigma, sub(z, sigma), projection.squared_value)


def clarke_generators(
    cloud: PointCloud, z: Sequence[Scalar]
) -> ClarkeGenerators:
    """
    Computes the generators ``z - x`` of Clarke's generalised gradient of the
    distance function at ``z``, one for every nearest cloud point ``x``.
    These are unnormalised; they share the squared length ``d(z)^2``.

    Raises
    ------
    ValueError
        When ``z`` is a cloud point. The generalised gradient there is the
        whole unit ball.
    """
    z = cloud.kernel.vector(z)

    if cloud.index_of(z) is not None:
        raise ValueError("Clarke generators at a cloud point not understood.")

    projection = projection_set(cloud, z)
    generators = tuple(sub(z, cloud[idx]) for idx in projection.indices)

    return ClarkeGenerators(
        projection.indices, generators, projection.squared_value
    )


def clarke_min_norm_element(cloud: PointCloud, z: Sequence[Scalar]) -> Vector:
    """
    The element of least norm in the convex hull of the Clarke generators at
    ``z``. This is the unnormalised generalised gradient ``z - sigma(z)``:
    the generalised gradient is the least-norm element of Clarke's
    generalised gradient.
    """
    kernel = cloud.kernel
    clarke = clarke_generators(cloud, z)
    origin = tuple(kernel.zero for _ in range(cloud.ambient))

    return min_norm_point(clarke.generators, origin, kernel).point
