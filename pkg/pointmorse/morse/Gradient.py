from dataclasses import dataclass
from typing import Tuple

import numpy as np

from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.morse.ProjectionRecord import ProjectionRecord


@dataclass(frozen=True)
class Gradient:
    R"""
    The generalised gradient :math:`(z - \sigma) / d(z)` of the distance
    function at a point :math:`z`, where :math:`\sigma` is the point of the
    convex hull of the nearest cloud points closest to :math:`z`. The
    normalising square root is irrational in general, so the exact record
    keeps the unnormalised vector together with the squared distance.

    Attributes
    ----------
    projection
        The nearest cloud points.
    sigma
        The nearest point of their convex hull.
    unnormalized
        The vector :math:`z - \sigma`.
    squared_value
        The squared distance :math:`d(z)^2`.
    """

    projection: ProjectionRecord
    sigma: Vector
    unnormalized: Vector
    squared_value: Scalar

    @property
    def is_zero(self) -> bool:
        return all(coord == 0 for coord in self.unnormalized)

    @property
    def normalized(self) -> np.ndarray:
        """
        The gradient as a float array. Zero at cloud points.
        """
        vector = np.array(self.unnormalized, dtype=float)

        if self.squared_value == 0:
            return np.zeros_like(vector)

        return vector / np.sqrt(float(self.squared_value))


@dataclass(frozen=True)
class ClarkeGenerators:
    """
    Generators :math:`z - x` of Clarke's generalised gradient of the distance
    function at :math:`z`, for the nearest cloud points :math:`x`. All
    generators have the same squared length, so the generalised gradient is
    the convex hull of the generators scaled by the inverse distance.
    """

    indices: Tuple[int, ...]
    generators: Tuple[Vector, ...]
    squared_length: Scalar

    @property
    def normalized(self) -> np.ndarray:
        """
        The unit-length generators as rows of a float array.
        """
        vectors = np.array(self.generators, dtype=float)
        return vectors / np.sqrt(float(self.squared_length))
