from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from pointmorse.linalg.scalars import Scalar, Vector


class ConeOutcome(IntEnum):
    """
    Enum of positive spanning test outcomes.
    """

    POSITIVELY_SPANS = 0  #: The vectors positively span their linear span.
    CERTIFICATE = 1  #: A nonzero v in the span has v.a <= 0 for all a.


@dataclass(frozen=True)
class ConeTestResult:
    """
    Outcome of :func:`~pointmorse.geometry.positive_span_test`.

    Attributes
    ----------
    outcome
        Which of the two alternatives holds.
    dim
        Dimension of the linear span of the tested vectors.
    margin
        Optimal value ``t*`` of the relative interior program, when the
        vectors positively span.
    certificate
        A nonzero vector ``v`` in the span with nonpositive inner products
        against every tested vector, when one exists.
    outside_hull
        Whether the origin was found outside the convex hull of the vectors.
        In that case a certificate always exists.
    """

    outcome: ConeOutcome
    dim: int
    margin: Optional[Scalar] = None
    certificate: Optional[Vector] = None
    outside_hull: bool = False

    @property
    def positively_spans(self) -> bool:
        return self.outcome == ConeOutcome.POSITIVELY_SPANS

    @property
    def has_certificate(self) -> bool:
        return self.outcome == ConeOutcome.CERTIFICATE
