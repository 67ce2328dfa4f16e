import logging
from typing import Optional, Sequence

from pointmorse.geometry import (
    conv_contains,
    min_norm_point,
    positive_span_test,
)
from pointmorse.linalg.scalars import Scalar
from pointmorse.linalg.vectors import sub
from pointmorse.morse.Classification import Classification, Kind
from pointmorse.morse.PointCloud import PointCloud
from pointmorse.morse.ProjectionRecord import ProjectionRecord
from pointmorse.morse.projection import projection_set

logger = logging.getLogger(__name__)


def classify(
    cloud: PointCloud,
    z: Sequence[Scalar],
    projection: Optional[ProjectionRecord] = None,
) -> Classification:
    """
    Classifies ``z`` as a topological critical or regular point of the
    distance function to the cloud:

    1. Cloud points are critical points of index zero.
    2. Points outside the convex hull of their nearest cloud points have a
       nonzero generalised gradient, and are regular.
    3. Otherwise ``z`` is a differential critical point. It is a topological
       critical point of index ``m = dim span{x - z}`` (over the nearest
       points ``x``) when the offsets ``x - z`` positively span their span,
       and regular when some nonzero ``v`` in that span has
       ``<v, x - z> <= 0`` for all nearest points ``x``.

    Parameters
    ----------
    cloud
        The point cloud.
    z
        The point to classify.
    projection
        Optional precomputed projection set of ``z``.

    Returns
    -------
    Classification
        The kind of point, with its index, margin, certificate or gradient.
    """
    kernel = cloud.kernel
    z = kernel.vector(z)

    if cloud.index_of(z) is not None:
        return Classification(Kind.MIN, index=0)

    if projection is None:
        projection = projection_set(cloud, z)

    nearest = [cloud[idx] for idx in projection.indices]

    if not conv_contains(nearest, z, kernel):
        sigma = min_norm_point(nearest, z, kernel).point
        return Classification(Kind.REGULAR_NONCRITICAL, gradient=sub(z, sigma))

    offsets = [sub(point, z) for point in nearest]
    cone = positive_span_test(offsets, kernel)

    if cone.positively_spans:
        logger.debug(f"Critical point of index {cone.dim} at {z}.")
        return Classification(
            Kind.CRITICAL, index=cone.dim, margin=cone.margin
        )

    logger.debug(f"Regular differential critical point at {z}.")
    return Classification(
        Kind.REGULAR_CERTIFICATE, certificate=cone.certificate
    )
