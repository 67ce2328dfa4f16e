import json
import math
from typing import Any, Dict, Optional, Sequence

from pointmorse.linalg.scalars import format_scalar, format_vector
from pointmorse.morse import CriticalPointRecord, Gradient, Kind, PointCloud
from pointmorse.offsets import (
    Crossing,
    OffsetVerificationReport,
    RegularCrossing,
)

# Points that are not differential critical are never enumerated; the kind
# name in reports says so.
_KIND_NAMES = {
    Kind.MIN: "min",
    Kind.CRITICAL: "critical",
    Kind.REGULAR_CERTIFICATE: "regular_certificate",
    Kind.REGULAR_NONCRITICAL: "regular_noncritical_skipped",
}


def dumps(document: Dict[str, Any]) -> str:
    """
    Serialises a report with sorted keys, so equal reports give identical
    text.
    """
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def record_to_dict(record: CriticalPointRecord) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "kind": _KIND_NAMES[record.kind],
        "location": list(format_vector(record.location)),
        "projection_indices": list(record.projection.indices),
        "squared_value": format_scalar(record.squared_value),
        "value": math.sqrt(record.squared_value),
    }

    if record.index is not None:
        document["index"] = record.index

    certificate = record.classification.certificate

    if certificate is not None:
        document["certificate_v"] = list(format_vector(certificate))

    return document


def analysis_report(
    cloud: PointCloud,
    records: Sequence[CriticalPointRecord],
    verification: Optional[OffsetVerificationReport] = None,
) -> Dict[str, Any]:
    """
    Builds the analysis report document: the input cloud and kernel, and one
    entry per critical point record. Exact scalars are written as canonical
    ``"p/q"`` strings, next to a float convenience value.
    """
    kernel = cloud.kernel
    document: Dict[str, Any] = {
        "input": {
            "atol": kernel.atol,
            "mode": kernel.mode.name.lower(),
            "points": [list(format_vector(point)) for point in cloud],
            "rtol": kernel.rtol,
        },
        "records": [record_to_dict(record) for record in records],
    }

    if verification is not None:
        document["verification"] = verification_to_dict(verification)

    return document


def _crossing_to_dict(crossing: Crossing) -> Dict[str, Any]:
    return {
        "after": list(crossing.after),
        "before": list(crossing.before),
        "delta": list(crossing.delta),
        "delta_euler": crossing.delta_euler,
        "euler_passed": crossing.euler_passed,
        "expected_euler": crossing.expected_euler,
        "handle_passed": crossing.handle_passed,
        "indices": list(crossing.indices),
        "squared_value": format_scalar(crossing.squared_value),
    }


def _regular_crossing_to_dict(crossing: RegularCrossing) -> Dict[str, Any]:
    return {
        "after": list(crossing.after),
        "before": list(crossing.before),
        "passed": crossing.passed,
        "squared_value": format_scalar(crossing.squared_value),
    }


def verification_to_dict(report: OffsetVerificationReport) -> Dict[str, Any]:
    return {
        "betti": [list(numbers) for numbers in report.betti],
        "critical_values": [format_scalar(v) for v in report.critical_values],
        "crossings": [_crossing_to_dict(c) for c in report.crossings],
        "passed": report.passed,
        "regular_crossings": [
            _regular_crossing_to_dict(c) for c in report.regular_crossings
        ],
        "rules": {
            "euler": report.euler_passed,
            "handle_attachment": report.handle_passed,
            "isotopy": report.isotopy_passed,
            "terminal_contractible": report.terminal_contractible,
        },
        "samples": [format_scalar(sample) for sample in report.samples],
    }


def gradient_to_dict(gradient: Gradient) -> Dict[str, Any]:
    return {
        "gradient_normalized_float": gradient.normalized.tolist(),
        "gradient_unnormalized_exact": list(
            format_vector(gradient.unnormalized)
        ),
        "pi_indices": list(gradient.projection.indices),
        "sigma": list(format_vector(gradient.sigma)),
        "squared_value": format_scalar(gradient.squared_value),
    }
