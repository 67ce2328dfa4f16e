import logging
from typing import Dict, List, Optional, Sequence

from pointmorse.geometry import min_enclosing_ball
from pointmorse.linalg.scalars import Scalar
from pointmorse.morse import PointCloud
from pointmorse.offsets.SimplicialComplex import Simplex, SimplicialComplex

logger = logging.getLogger(__name__)


class CechFiltration:
    R"""
    Čech complexes of the offsets of a point cloud. The offset at squared
    radius ``t`` is the union of the closed balls of squared radius ``t``
    around the cloud points; by the nerve theorem it is homotopy equivalent
    to its Čech complex, which contains a simplex exactly when the smallest
    ball enclosing its vertices has squared radius at most ``t``.

    Smallest enclosing balls are cached per simplex, so that complexes at
    several radii share their computations.

    Parameters
    ----------
    cloud
        The point cloud.
    max_dim
        Largest simplex dimension to build. Defaults to the ambient dimension,
        which suffices since a union of balls in :math:`\mathbb{R}^n` has no
        homology in dimension ``n`` or above.
    """

    def __init__(self, cloud: PointCloud, max_dim: Optional[int] = None):
        if max_dim is None:
            max_dim = cloud.ambient

        if max_dim < 0:
            raise ValueError(f"max_dim = {max_dim} not understood.")

        self._cloud = cloud
        self._max_dim = max_dim
        self._radii: Dict[Simplex, Scalar] = {}

    @property
    def cloud(self) -> PointCloud:
        return self._cloud

    @property
    def max_dim(self) -> int:
        return self._max_dim

    def squared_radius(self, simplex: Sequence[int]) -> Scalar:
        """
        Squared radius of the smallest ball enclosing the simplex's vertices.
        """
        simplex = tuple(simplex)

        if simplex not in self._radii:
            points = [self._cloud[idx] for idx in simplex]
            ball = min_enclosing_ball(points, self._cloud.kernel)
            self._radii[simplex] = ball.squared_radius

        return self._radii[simplex]

    def complex_at(self, squared_t: Scalar) -> SimplicialComplex:
        """
        Builds the Čech complex at the given squared radius, dimension by
        dimension: a candidate simplex extends a present simplex by a larger
        vertex, and needs all its facets present before its enclosing ball is
        computed. The comparison with ``squared_t`` is inclusive.
        """
        kernel = self._cloud.kernel
        squared_t = kernel.convert(squared_t)

        if kernel.sign(squared_t) < 0:
            raise ValueError(f"squared_t = {squared_t} not understood.")

        num_points = len(self._cloud)
        layer: List[Simplex] = [(idx,) for idx in range(num_points)]
        simplices: List[Simplex] = []

        for _ in range(self._max_dim):
            present = set(layer)
            candidates = [
                simplex + (vertex,)
                for simplex in layer
                for vertex in range(simplex[-1] + 1, num_points)
            ]

            layer = [
                simplex
                for simplex in candidates
                if all(
                    simplex[:idx] + simplex[idx + 1 :] in present
                    for idx in range(len(simplex) - 1)
                )
                and kernel.compare(self.squared_radius(simplex), squared_t)
                <= 0
            ]

            if not layer:
                break

            simplices.extend(layer)

        logger.debug(
            f"Čech complex at squared radius {squared_t} has "
            f"{num_points + len(simplices)} simplices."
        )

        return SimplicialComplex(num_points, simplices, self._max_dim)


def cech_complex(
    cloud: PointCloud, squared_t: Scalar, max_dim: Optional[int] = None
) -> SimplicialComplex:
    """
    Čech complex of the cloud at the given squared radius, with simplices up
    to dimension ``max_dim`` (the ambient dimension by default). See
    :class:`~pointmorse.offsets.CechFiltration` for details.
    """
    return CechFiltration(cloud, max_dim).complex_at(squared_t)
