import logging

import numpy as np
import numpy.random as rnd

from pointmorse.morse.Classification import Kind
from pointmorse.morse.CriticalPointRecord import CriticalPointRecord
from pointmorse.morse.PointCloud import PointCloud
from pointmorse.morse.projection import distance

logger = logging.getLogger(__name__)


def probe_local_model(
    cloud: PointCloud,
    record: CriticalPointRecord,
    step: float = 1e-5,
    num_samples: int = 16,
    seed: int = 0,
) -> bool:
    """
    Samples the distance function around a classified point, and checks the
    local behaviour its classification predicts:

    * a cloud point is a strict local minimum;
    * a critical point of index ``m`` is a strict local maximum along the
      ``m``-dimensional span of its nearest points' offsets, and a strict
      local minimum along the orthogonal complement;
    * a regular differential critical point strictly increases along its
      certificate;
    * any other point strictly increases along its gradient.

    The check runs in floats, and is a numerical sanity check rather than a
    proof.

    Parameters
    ----------
    cloud
        The point cloud.
    record
        The classified point.
    step
        Probe distance, relative to the distance from the point to the cloud
        (or absolute, at cloud points).
    num_samples
        Number of random directions per subspace.
    seed
        Seed for the random directions.

    Returns
    -------
    bool
        Whether every probe behaved as predicted.
    """
    rng = rnd.default_rng(seed)
    z = np.array(record.location, dtype=float)
    value = distance(cloud, z)
    delta = step * value if value > 0 else step

    def increases(directions: np.ndarray) -> bool:
        return bool(np.all(distance(cloud, z + delta * directions) > value))

    def decreases(directions: np.ndarray) -> bool:
        return bool(np.all(distance(cloud, z + delta * directions) < value))

    dim = cloud.ambient

    if record.kind == Kind.MIN:
        return increases(_unit(rng.normal(size=(num_samples, dim))))

    if record.kind == Kind.REGULAR_CERTIFICATE:
        return increases(_unit(np.array([record.classification.certificate])))

    if record.kind == Kind.REGULAR_NONCRITICAL:
        return increases(_unit(np.array([record.classification.gradient])))

    points = cloud.to_numpy()[list(record.projection.indices)]
    basis = _orthonormal_basis(points - z)
    inside = rng.normal(size=(num_samples, basis.shape[0])) @ basis

    if not decreases(_unit(inside)):
        logger.debug(f"Distance does not decrease within the span at {z}.")
        return False

    if basis.shape[0] == dim:
        return True

    outside = rng.normal(size=(num_samples, dim))
    outside -= outside @ basis.T @ basis
    return increases(_unit(outside))


def _unit(directions: np.ndarray) -> np.ndarray:
    directions = np.asarray(directions, dtype=float)
    return directions / np.linalg.norm(directions, axis=-1, keepdims=True)


def _orthonormal_basis(vectors: np.ndarray) -> np.ndarray:
    """
    Rows forming an orthonormal basis of the span of the given rows.
    """
    _, singular, vt = np.linalg.svd(vectors)
    rank = int(np.sum(singular > 1e-10 * singular.max()))
    return vt[:rank]
