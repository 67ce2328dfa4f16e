from dataclasses import dataclass
from typing import Optional, Tuple

from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.morse.Classification import Classification, Kind
from pointmorse.morse.ProjectionRecord import ProjectionRecord


@dataclass(frozen=True)
class CriticalPointRecord:
    """
    A differential critical point of the distance function, with its
    projection set and topological classification.
    """

    location: Vector
    squared_value: Scalar
    projection: ProjectionRecord
    classification: Classification

    @property
    def kind(self) -> Kind:
        return self.classification.kind

    @property
    def index(self) -> Optional[int]:
        return self.classification.index

    @property
    def is_topological_critical(self) -> bool:
        return self.classification.is_topological_critical

    def sort_key(self) -> Tuple[Scalar, Vector]:
        return self.squared_value, self.location
