import io
import logging
from typing import Optional, Sequence, Tuple

import matplotlib
import numpy as np
from matplotlib.axes import Axes
from matplotlib.figure import Figure

from pointmorse.morse import CriticalPointRecord, Kind, PointCloud, distance

logger = logging.getLogger(__name__)

BBox = Tuple[float, float, float, float]

_SVG_PARAMS = {
    "svg.hashsalt": "pointmorse",
    "svg.fonttype": "none",
    "path.simplify": False,
}


def plot_level_sets(
    cloud: PointCloud,
    records: Sequence[CriticalPointRecord],
    ax: Axes,
    grid: int = 400,
    levels: int = 10,
    bbox: Optional[BBox] = None,
):
    """
    Draws level sets of the distance function to a planar cloud, with the
    cloud points and the differential critical points marked.

    The distance function is evaluated in floats on a ``grid`` by ``grid``
    lattice, and ``levels`` evenly spaced level sets are traced by marching
    squares. Cloud points are drawn as dots, critical points of positive
    index as crosses labelled with their index, and differential critical
    points that are topologically regular as hollow circles. Each marker
    group carries an id: ``cloud-points``, ``critical-index-<m>`` and
    ``regular-critical``.

    Parameters
    ----------
    cloud
        A cloud in the plane.
    records
        Its critical point records.
    ax
        Axes to draw on.
    grid
        Number of lattice points along each axis.
    levels
        Number of level sets.
    bbox
        Optional ``(xmin, ymin, xmax, ymax)`` plot region. When not passed, a
        square region around the cloud is used.

    Raises
    ------
    ValueError
        When the cloud is not planar, or the grid or level counts are not
        positive.
    """
    if cloud.ambient != 2:
        raise ValueError(f"Plotting {cloud.ambient}D clouds not understood.")

    if grid < 2 or levels < 1:
        raise ValueError(f"grid = {grid}, levels = {levels} not understood.")

    if bbox is None:
        bbox = auto_bbox(cloud)

    xmin, ymin, xmax, ymax = bbox
    xs = np.linspace(xmin, xmax, grid)
    ys = np.linspace(ymin, ymax, grid)
    xx, yy = np.meshgrid(xs, ys)
    values = distance(cloud, np.stack([xx, yy], axis=-1))

    heights = np.linspace(0, values.max(), levels + 2)[1:-1]
    ax.contour(
        xx, yy, values, levels=heights, colors="tab:blue", linewidths=0.8
    )

    points = cloud.to_numpy()
    dots = ax.scatter(points[:, 0], points[:, 1], s=16, c="black", zorder=3)
    dots.set_gid("cloud-points")

    critical = [r for r in records if r.kind == Kind.CRITICAL]

    for index in sorted({record.index for record in critical}):
        where = np.array(
            [r.location for r in critical if r.index == index], dtype=float
        )
        markers = ax.scatter(
            where[:, 0], where[:, 1], s=40, c="tab:red", marker="x", zorder=4
        )
        markers.set_gid(f"critical-index-{index}")

        for x, y in where:
            ax.annotate(
                str(index),
                (x, y),
                xytext=(4, 4),
                textcoords="offset points",
                color="tab:red",
            )

    regular = [r for r in records if r.kind == Kind.REGULAR_CERTIFICATE]

    if regular:
        where = np.array([r.location for r in regular], dtype=float)
        hollow = ax.scatter(
            where[:, 0],
            where[:, 1],
            s=40,
            facecolors="none",
            edgecolors="tab:green",
            zorder=4,
        )
        hollow.set_gid("regular-critical")

    ax.set_xlim(xmin, xmax)
    ax.set_ylim(ymin, ymax)


def auto_bbox(cloud: PointCloud) -> BBox:
    """
    Square region around the cloud, centred on its bounding box, with side
    twice the largest extent of the cloud. A single point gets side four.
    """
    points = cloud.to_numpy()
    lo, hi = points.min(axis=0), points.max(axis=0)
    extent = float((hi - lo).max()) or 2.0
    center = (lo + hi) / 2
    half = extent

    return (
        float(center[0] - half),
        float(center[1] - half),
        float(center[0] + half),
        float(center[1] + half),
    )


def render_svg(
    cloud: PointCloud,
    records: Sequence[CriticalPointRecord],
    grid: int = 400,
    levels: int = 10,
    bbox: Optional[BBox] = None,
    generator: str = "pointmorse",
) -> str:
    """
    Renders the level set plot of :func:`plot_level_sets` to an SVG document.
    The output is deterministic: ids are salted with a fixed string, text is
    kept as text and no date is recorded. Two comments follow the XML
    declaration: the generator, and the affine map from data coordinates to
    SVG coordinates (which point down), as an SVG ``matrix(a b c d e f)``.
    """
    if bbox is None:
        bbox = auto_bbox(cloud)

    with matplotlib.rc_context(_SVG_PARAMS):
        # Square axes in a square figure, so equal data extents give equal
        # scales without aspect adjustment at draw time.
        fig = Figure(figsize=(6, 6), dpi=72)
        ax = fig.add_axes((0.1, 0.1, 0.8, 0.8))
        plot_level_sets(cloud, records, ax, grid, levels, bbox)
        transform = _svg_transform(fig, ax)

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})

    declaration, rest = buffer.getvalue().split("\n", 1)
    comments = [
        f"<!-- generator: {generator} -->",
        f"<!-- data-to-svg: matrix({transform}) -->",
    ]

    logger.debug(f"Rendered SVG with data-to-svg transform {transform}.")

    return "\n".join([declaration, *comments, rest])


def _svg_transform(fig: Figure, ax: Axes) -> str:
    height = fig.get_figheight() * 72
    origin, unit_x, unit_y = ax.transData.transform([(0, 0), (1, 0), (0, 1)])

    a, b = unit_x - origin
    c, d = unit_y - origin
    e, f = origin

    # Flip the y-axis: SVG coordinates increase downwards.
    coefficients = (a, -b, c, -d, e, height - f)
    return " ".join(f"{value:.6f}" for value in coefficients)
