import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from pointmorse.Kernel import Kernel
from pointmorse.linalg.scalars import Vector
from pointmorse.morse import PointCloud, coinciding_pairs

logger = logging.getLogger(__name__)


def load_point_cloud(
    path: Union[str, Path], kernel: Optional[Kernel] = None
) -> PointCloud:
    """
    Reads a point cloud from a CSV file with one point per line. Coordinates
    are separated by commas, and each is an integer, a fraction ``p/q`` or a
    decimal literal. Blank lines and lines starting with ``#`` are skipped.

    Parameters
    ----------
    path
        Location of the CSV file.
    kernel
        Optional number kernel, whose mode the coordinates are parsed into.
        Exact when not passed.

    Raises
    ------
    OSError
        When the file cannot be read.
    ValueError
        When the file holds no points, a coordinate does not parse, rows have
        different lengths, or points repeat. Messages name the offending line
        numbers.

    Returns
    -------
    PointCloud
        The cloud, with dimension inferred from the first row.
    """
    with open(path, encoding="utf-8") as fh:
        cloud = parse_point_cloud(fh, kernel)

    logger.info(
        f"Read {len(cloud)} points of dimension {cloud.ambient} from {path}."
    )

    return cloud


def parse_point_cloud(
    lines: Iterable[str], kernel: Optional[Kernel] = None
) -> PointCloud:
    """
    Parses the CSV lines of a cloud file. See :func:`load_point_cloud`.
    """
    if kernel is None:
        kernel = Kernel()

    points: List[Vector] = []
    line_numbers: List[int] = []

    for line_number, line in enumerate(lines, start=1):
        line = line.strip()

        if not line or line.startswith("#"):
            continue

        try:
            point = tuple(kernel.parse(field) for field in line.split(","))
        except ValueError as exc:
            raise ValueError(f"Line {line_number}: {exc}") from exc

        if points and len(point) != len(points[0]):
            raise ValueError(
                f"Line {line_number} has {len(point)} coordinates, but line "
                f"{line_numbers[0]} has {len(points[0])}."
            )

        points.append(point)
        line_numbers.append(line_number)

    if not points:
        raise ValueError("Point cloud file without points not understood.")

    duplicates = coinciding_pairs(points, kernel)

    if duplicates:
        first, second = duplicates[0]
        raise ValueError(
            f"Duplicate points on lines {line_numbers[first]}, "
            f"{line_numbers[second]}."
        )

    return PointCloud(points, kernel)
