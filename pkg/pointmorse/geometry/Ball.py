from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence, Tuple

from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.linalg.vectors import squared_dist

if TYPE_CHECKING:
    from pointmorse.Kernel import Kernel


@dataclass(frozen=True)
class Ball:
    """
    A closed ball, stored through its squared radius so that exact balls
    never require square roots.

    Attributes
    ----------
    center
        The center of the ball.
    squared_radius
        The squared radius, nonnegative.
    support
        Points on the boundary sphere that determine the ball, for example the
        support set of a smallest enclosing ball.
    """

    center: Vector
    squared_radius: Scalar
    support: Tuple[Vector, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.squared_radius < 0:
            raise ValueError("Negative squared radius not understood.")

    def contains(self, point: Sequence[Scalar], kernel: Kernel) -> bool:
        """
        Tests whether the point lies in the closed ball.
        """
        dist = squared_dist(point, self.center)
        return kernel.compare(dist, self.squared_radius) <= 0

    def on_boundary(self, point: Sequence[Scalar], kernel: Kernel) -> bool:
        dist = squared_dist(point, self.center)
        return kernel.compare(dist, self.squared_radius) == 0
