import logging
import time
from typing import List, Optional, Sequence, Tuple

from pointmorse.geometry import (
    Ball,
    circumcenter_in_affine_hull,
    conv_contains,
    has_empty_sphere,
)
from pointmorse.linalg.scalars import Scalar
from pointmorse.linalg.vectors import squared_dist
from pointmorse.morse.Classification import Classification, Kind
from pointmorse.morse.CriticalPointRecord import CriticalPointRecord
from pointmorse.morse.PointCloud import PointCloud
from pointmorse.morse.ProjectionRecord import ProjectionRecord
from pointmorse.morse.classify import classify

logger = logging.getLogger(__name__)


def enumerate_critical(
    cloud: PointCloud,
    max_subset_size: Optional[int] = None,
    max_points: int = 25,
) -> List[CriticalPointRecord]:
    """
    Enumerates all differential critical points of the distance function to
    the cloud, and classifies each of them.

    Every cloud point is a critical point of index zero. Any other
    differential critical point ``z`` lies in the convex hull of its set
    ``S`` of nearest cloud points, hence in their affine hull, and is
    equidistant from them: it is the circumcenter of ``S`` within the
    affine hull of ``S``. The enumeration therefore visits subsets ``S`` of
    the cloud, and keeps the circumcenter ``c`` of ``S`` exactly when the
    nearest-point set of ``c`` is ``S`` itself (so that each critical point
    is found once, by its full nearest-point set) and ``c`` lies in the
    convex hull of ``S``.

    Subsets are visited depth-first in lexicographic order. A subset whose
    points have no common empty sphere (no sphere through them with no cloud
    point strictly inside) cannot be part of any nearest-point set, and
    neither can its supersets, so its subtree is pruned.

    Parameters
    ----------
    cloud
        The point cloud.
    max_subset_size
        Optional bound on the size of the visited subsets. Critical points
        with more nearest points than this bound are not found, so a bound
        below the cloud size may give an incomplete enumeration. Passing a
        bound also lifts the ``max_points`` cap.
    max_points
        Largest cloud size enumerated without ``max_subset_size``. Default 25.

    Raises
    ------
    ValueError
        When the cloud has more than ``max_points`` points and no
        ``max_subset_size`` is passed, or when ``max_subset_size`` is not
        positive.

    Returns
    -------
    List[CriticalPointRecord]
        All records, sorted by squared value and then by location. Points
        that are differential but not topological critical points are
        included, with kind ``REGULAR_CERTIFICATE``.
    """
    num_points = len(cloud)

    if max_subset_size is None:
        if num_points > max_points:
            raise ValueError(
                f"Cloud of {num_points} points exceeds the enumeration cap "
                f"of {max_points} points; pass max_subset_size to override."
            )

        limit = num_points
    elif max_subset_size < 1:
        msg = f"max_subset_size = {max_subset_size} not understood."
        raise ValueError(msg)
    else:
        limit = min(max_subset_size, num_points)

        if limit < num_points:
            logger.warning(
                f"Subsets limited to {limit} of {num_points} points; the "
                "enumeration may be incomplete."
            )

    start = time.perf_counter()
    records = [_min_record(cloud, idx) for idx in range(num_points)]
    stack: List[Tuple[int, ...]] = [(idx,) for idx in range(num_points)]
    stack.reverse()
    num_visited = 0

    while stack:
        subset = stack.pop()
        num_visited += 1

        if len(subset) > 1:
            ball = _empty_circumball(cloud, subset)

            if ball is None:
                logger.debug(f"Pruned subsets containing {subset}.")
                continue

            record = _candidate(cloud, subset, ball)

            if record is not None:
                records.append(record)

        if len(subset) < limit:
            children = range(num_points - 1, subset[-1], -1)
            stack.extend(subset + (idx,) for idx in children)

    records.sort(key=CriticalPointRecord.sort_key)

    logger.info(
        f"Found {len(records)} critical point records after visiting "
        f"{num_visited} subsets in {time.perf_counter() - start:.2f}s."
    )

    return records


def euler_characteristic(records: Sequence[CriticalPointRecord]) -> int:
    """
    Alternating count of the topological critical points by index. For the
    records of a complete enumeration this equals one, the Euler
    characteristic of the (eventually contractible) offsets.
    """
    return sum(
        (-1) ** record.index
        for record in records
        if record.is_topological_critical
    )


def critical_values(
    records: Sequence[CriticalPointRecord], topological: bool = True
) -> List[Scalar]:
    """
    Sorted distinct squared values of the records: of the topological
    critical records only, or of all records when ``topological`` is False.
    """
    return sorted(
        {
            record.squared_value
            for record in records
            if record.is_topological_critical or not topological
        }
    )


def _min_record(cloud: PointCloud, idx: int) -> CriticalPointRecord:
    zero = cloud.kernel.zero
    return CriticalPointRecord(
        cloud[idx],
        zero,
        ProjectionRecord((idx,), zero),
        Classification(Kind.MIN, index=0),
    )


def _empty_circumball(
    cloud: PointCloud, subset: Tuple[int, ...]
) -> Optional[Ball]:
    """
    The circumscribed ball of the subset within its affine hull, if the
    subset may be contained in a nearest-point set, and None otherwise.
    Points without a circumcenter have no equidistant point at all, and
    hence no empty sphere either; that is the cheaper test.
    """
    points = [cloud[idx] for idx in subset]
    ball = circumcenter_in_affine_hull(points, cloud.kernel)

    if ball is None:
        return None

    if not has_empty_sphere(cloud.points, subset, cloud.kernel):
        return None

    return ball


def _candidate(
    cloud: PointCloud, subset: Tuple[int, ...], ball: Ball
) -> Optional[CriticalPointRecord]:
    kernel = cloud.kernel
    points = [cloud[idx] for idx in subset]
    center, squared_radius = ball.center, ball.squared_radius
    chosen = set(subset)

    for idx, point in enumerate(cloud):
        if idx in chosen:
            continue

        # A point at most as far as the subset means the nearest-point set
        # of the center is not exactly the subset.
        if kernel.compare(squared_dist(point, center), squared_radius) <= 0:
            return None

    if not conv_contains(points, center, kernel):
        return None

    projection = ProjectionRecord(subset, squared_radius)
    classification = classify(cloud, center, projection)

    return CriticalPointRecord(
        center, squared_radius, projection, classification
    )
