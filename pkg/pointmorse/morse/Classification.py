from dataclasses import dataclass
from enum import Enum
from typing import Optional

from pointmorse.linalg.scalars import Scalar, Vector


class Kind(Enum):
    """
    Enum of point kinds for the distance function to a point cloud.
    """

    MIN = "min"  #: A cloud point: critical of index zero.
    CRITICAL = "critical"  #: Topological critical point of positive index.
    REGULAR_CERTIFICATE = "regular_certificate"  #: Regular, with certificate.
    REGULAR_NONCRITICAL = "regular_noncritical"  #: Nonzero gradient.


@dataclass(frozen=True)
class Classification:
    """
    Topological classification of a point.

    Attributes
    ----------
    kind
        The kind of point.
    index
        The index: zero for cloud points, the dimension of the span of the
        nearest points' offsets for critical points, None otherwise.
    margin
        Relative interior margin of the positive spanning test, for critical
        points of positive index.
    certificate
        Nonzero direction ``v`` in the span of the nearest points' offsets
        along which no nearest point gets closer, for differential critical
        points that are topologically regular.
    gradient
        The unnormalised generalised gradient ``z - sigma``, for points that
        are not differential critical points.
    """

    kind: Kind
    index: Optional[int] = None
    margin: Optional[Scalar] = None
    certificate: Optional[Vector] = None
    gradient: Optional[Vector] = None

    @property
    def is_topological_critical(self) -> bool:
        return self.kind in (Kind.MIN, Kind.CRITICAL)

    @property
    def is_differential_critical(self) -> bool:
        return self.kind != Kind.REGULAR_NONCRITICAL
