import logging
import time
from typing import Dict, List, Sequence

from pointmorse.linalg.scalars import Scalar
from pointmorse.morse import (
    CriticalPointRecord,
    Kind,
    PointCloud,
    squared_distance,
)
from pointmorse.offsets.CechFiltration import CechFiltration
from pointmorse.offsets.OffsetVerificationReport import (
    Betti,
    Crossing,
    OffsetVerificationReport,
    RegularCrossing,
)
from pointmorse.offsets.betti import betti

logger = logging.getLogger(__name__)


def verify_morse_consistency(
    cloud: PointCloud, records: Sequence[CriticalPointRecord]
) -> OffsetVerificationReport:
    R"""
    Checks the critical points of the distance function against the topology
    of the offsets, computed as Betti numbers of Čech complexes at sampled
    radii. All radii are squared. The checks are:

    * Isotopy: across a value with only topologically regular (differential
      critical) points, the Betti numbers do not change. Extra samples are
      placed halfway towards the neighbouring values.
    * Euler bookkeeping: across each topological critical value, the Euler
      characteristic changes by the sum of :math:`(-1)^m` over the indices
      ``m`` of the critical points at that value. At value zero the offsets
      go from empty to the cloud itself.
    * Handle attachment: a single critical point of index ``m`` either adds
      one to :math:`\beta_m`, or removes one from :math:`\beta_{m - 1}`,
      and leaves the other Betti numbers unchanged.
    * Terminal contractibility: beyond the last value the offsets are
      connected and have no higher homology.

    Parameters
    ----------
    cloud
        The point cloud.
    records
        The critical point records of the cloud, as returned by
        :func:`~pointmorse.morse.enumerate_critical`.

    Raises
    ------
    ValueError
        When the records do not belong to the cloud.

    Returns
    -------
    OffsetVerificationReport
        The sampled Betti numbers and the outcome of each check.
    """
    start = time.perf_counter()
    kernel = cloud.kernel

    _check_records(cloud, records)

    topological: Dict[Scalar, List[int]] = {}
    differential = set()

    for record in records:
        differential.add(record.squared_value)

        if record.is_topological_critical:
            indices = topological.setdefault(record.squared_value, [])
            indices.append(record.index)

    values = sorted(topological)
    largest = max(differential)
    beyond = 2 * largest if kernel.sign(largest) > 0 else kernel.one
    samples = [(lo + hi) / 2 for lo, hi in zip(values, values[1:])]
    samples.append(beyond)

    filtration = CechFiltration(cloud)
    cache: Dict[Scalar, Betti] = {}

    def betti_at(squared_t: Scalar) -> Betti:
        if squared_t not in cache:
            cache[squared_t] = betti(filtration.complex_at(squared_t))
            logger.debug(f"Betti numbers {cache[squared_t]} at {squared_t}.")

        return cache[squared_t]

    intervals = [betti_at(sample) for sample in samples]
    empty = tuple(0 for _ in intervals[0])
    crossings = [
        Crossing(
            squared_value=value,
            indices=tuple(sorted(topological[value])),
            before=intervals[idx - 1] if idx > 0 else empty,
            after=intervals[idx],
            expected_euler=sum((-1) ** m for m in topological[value]),
        )
        for idx, value in enumerate(values)
    ]

    everything = sorted(differential | {beyond})
    regular_crossings = []

    for idx, value in enumerate(everything):
        if value in topological or value == beyond:
            continue

        lo = (everything[idx - 1] + value) / 2
        hi = (value + everything[idx + 1]) / 2
        regular_crossings.append(
            RegularCrossing(value, betti_at(lo), betti_at(hi))
        )

    report = OffsetVerificationReport(
        critical_values=tuple(values),
        samples=tuple(samples),
        betti=tuple(intervals),
        crossings=tuple(crossings),
        regular_crossings=tuple(regular_crossings),
    )

    runtime = time.perf_counter() - start
    outcome = "passed" if report.passed else "failed"
    logger.info(
        f"Offset verification {outcome} on {len(cache)} sampled radii "
        f"in {runtime:.2f} seconds."
    )

    return report


def _check_records(cloud: PointCloud, records: Sequence[CriticalPointRecord]):
    if not records:
        raise ValueError("Empty records not understood.")

    kernel = cloud.kernel
    minima = set()

    for record in records:
        if len(record.location) != cloud.ambient:
            raise ValueError(
                f"Record at {record.location} has dimension "
                f"{len(record.location)}, but cloud has {cloud.ambient}."
            )

        value = squared_distance(cloud, record.location)

        if kernel.compare(value, record.squared_value) != 0:
            raise ValueError(
                f"Record at {record.location} has squared value "
                f"{record.squared_value}, but the cloud gives {value}."
            )

        if record.kind == Kind.MIN:
            minima.add(cloud.index_of(record.location))

    if len(minima) != len(cloud):
        raise ValueError("Records do not list every cloud point as minimum.")
