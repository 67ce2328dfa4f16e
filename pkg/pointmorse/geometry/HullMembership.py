from dataclasses import dataclass
from typing import Optional

from pointmorse.linalg.scalars import Vector


@dataclass(frozen=True)
class HullMembership:
    """
    Outcome of a convex hull membership test. When the point is inside, the
    coefficients are convex weights (nonnegative, summing to one) that
    reproduce the point as a combination of the hull's generators.
    """

    inside: bool
    coefficients: Optional[Vector] = None

    def __bool__(self) -> bool:
        return self.inside
