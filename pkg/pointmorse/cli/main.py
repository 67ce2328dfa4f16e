import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pointmorse.Kernel import Kernel
from pointmorse.Mode import Mode
from pointmorse.cli.cloud_io import load_point_cloud
from pointmorse.cli.plot import auto_bbox, render_svg
from pointmorse.cli.report import (
    analysis_report,
    dumps,
    gradient_to_dict,
)
from pointmorse.morse import enumerate_critical, generalized_gradient
from pointmorse.offsets import verify_morse_consistency
from pointmorse.show_versions import installed_versions, show_versions

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2


def _kernel(args: argparse.Namespace) -> Kernel:
    return Kernel(Mode[args.mode.upper()], rtol=args.tol)


def _write(text: str, out: Optional[Path]):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}.")


def _analyze(args: argparse.Namespace) -> int:
    cloud = load_point_cloud(args.input, _kernel(args))
    records = enumerate_critical(cloud, args.max_subset)
    _write(dumps(analysis_report(cloud, records)), args.out)
    return EXIT_SUCCESS


def _gradient(args: argparse.Namespace) -> int:
    kernel = _kernel(args)
    cloud = load_point_cloud(args.input, kernel)
    at = [kernel.parse(field) for field in args.at.split(",")]
    gradient = generalized_gradient(cloud, at)
    _write(dumps(gradient_to_dict(gradient)), None)
    return EXIT_SUCCESS


def _verify(args: argparse.Namespace) -> int:
    cloud = load_point_cloud(args.input, _kernel(args))
    records = enumerate_critical(cloud, args.max_subset)
    report = verify_morse_consistency(cloud, records)
    _write(dumps(analysis_report(cloud, records, report)), args.out)

    if not report.passed:
        logger.warning("Offset verification failed.")
        return EXIT_VERIFICATION_FAILED

    return EXIT_SUCCESS


def _plot(args: argparse.Namespace) -> int:
    kernel = _kernel(args)
    cloud = load_point_cloud(args.input, kernel)

    if cloud.ambient != 2:
        raise ValueError(f"Plotting {cloud.ambient}D clouds not understood.")

    if args.bbox == "auto":
        bbox = auto_bbox(cloud)
    else:
        bbox = tuple(float(kernel.parse(v)) for v in args.bbox.split(","))

        if len(bbox) != 4 or bbox[0] >= bbox[2] or bbox[1] >= bbox[3]:
            raise ValueError(f"bbox = {args.bbox} not understood.")

    records = enumerate_critical(cloud, args.max_subset)
    svg = render_svg(
        cloud,
        records,
        grid=args.grid,
        levels=args.levels,
        bbox=bbox,
        generator=_generator(),
    )
    _write(svg, args.out)
    return EXIT_SUCCESS


def _generator() -> str:
    installed = dict(installed_versions())["pointmorse"]

    if installed == "not installed":
        return "pointmorse"

    return f"pointmorse {installed}"


def _versions(args: argparse.Namespace) -> int:
    show_versions()
    return EXIT_SUCCESS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointmorse",
        description="Critical points of the distance function to a point "
        "cloud, and the topology of its offsets.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log more; pass twice for debug output.",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--input", type=Path, required=True, help="Point cloud CSV file."
    )
    common.add_argument(
        "--mode",
        choices=["exact", "float"],
        default="exact",
        help="Number mode. Default exact.",
    )
    common.add_argument(
        "--tol",
        type=float,
        default=1e-9,
        help="Relative tolerance in float mode. Default 1e-9.",
    )

    enumeration = argparse.ArgumentParser(add_help=False)
    enumeration.add_argument(
        "--max-subset",
        type=int,
        default=None,
        help="Largest subset size to enumerate. Lifts the point cap.",
    )

    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze",
        parents=[common, enumeration],
        help="Enumerate and classify the critical points.",
    )
    analyze.add_argument("--out", type=Path, help="Report JSON file.")
    analyze.set_defaults(handler=_analyze)

    gradient = commands.add_parser(
        "gradient",
        parents=[common],
        help="Generalised gradient at a point.",
    )
    gradient.add_argument(
        "--at", required=True, help='Query point, as in "x,y,...".'
    )
    gradient.set_defaults(handler=_gradient)

    verify = commands.add_parser(
        "verify",
        parents=[common, enumeration],
        help="Check the critical points against the offsets' topology.",
    )
    verify.add_argument("--out", type=Path, help="Report JSON file.")
    verify.set_defaults(handler=_verify)

    plot = commands.add_parser(
        "plot",
        parents=[common, enumeration],
        help="Level sets of a planar cloud's distance function, as SVG.",
    )
    plot.add_argument("--out", type=Path, required=True, help="SVG file.")
    plot.add_argument(
        "--grid", type=int, default=400, help="Grid size. Default 400."
    )
    plot.add_argument(
        "--levels", type=int, default=10, help="Level sets. Default 10."
    )
    plot.add_argument(
        "--bbox",
        default="auto",
        help='Plot region "xmin,ymin,xmax,ymax", or "auto" (default).',
    )
    plot.set_defaults(handler=_plot)

    versions = commands.add_parser(
        "versions", help="Print installed versions, for bug reports."
    )
    versions.set_defaults(handler=_versions)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the ``pointmorse`` command. Returns the exit code: zero
    on success, one when offset verification fails, and two on input errors.
    """
    args = build_parser().parse_args(argv)

    level = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(
        level=level[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.handler(args)
    except (OSError, ValueError) as exc:
        print(f"pointmorse: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
