from dataclasses import dataclass
from typing import Tuple

from pointmorse.linalg.scalars import Scalar


@dataclass(frozen=True)
class ProjectionRecord:
    """
    The set of cloud points nearest to a query point.

    Attributes
    ----------
    indices
        Sorted indices of the nearest cloud points. Never empty.
    squared_value
        Their common squared distance to the query point.
    """

    indices: Tuple[int, ...]
    squared_value: Scalar

    def __len__(self) -> int:
        return len(self.indices)
