from dataclasses import dataclass
from typing import Tuple

from pointmorse.linalg.scalars import Vector


@dataclass(frozen=True)
class SpanBasis:
    """
    A basis of the linear span of a set of vectors.

    Attributes
    ----------
    dim
        The dimension ``m`` of the span, that is, the rank.
    basis
        ``m`` linearly independent vectors spanning the same space.
    ambient
        The ambient dimension ``n`` of the vectors.
    """

    dim: int
    basis: Tuple[Vector, ...]
    ambient: int
