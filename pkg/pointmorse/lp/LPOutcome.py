from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from pointmorse.linalg.scalars import Scalar, Vector


class LPStatus(IntEnum):
    """
    Enum of linear programming outcomes.
    """

    OPTIMAL = 0  #: An optimal solution was found.
    INFEASIBLE = 1  #: No point satisfies all constraints.
    UNBOUNDED = 2  #: The objective is unbounded above.


@dataclass(frozen=True)
class LPOutcome:
    """
    Result of solving a linear program. The primal solution and objective
    value are only present when the status is optimal; in exact mode the
    primal solution then satisfies every constraint exactly.
    """

    status: LPStatus
    primal: Optional[Vector] = None
    objective_value: Optional[Scalar] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL

    @property
    def is_infeasible(self) -> bool:
        return self.status == LPStatus.INFEASIBLE

    @property
    def is_unbounded(self) -> bool:
        return self.status == LPStatus.UNBOUNDED
