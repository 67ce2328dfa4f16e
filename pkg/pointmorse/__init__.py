from .Kernel import Kernel
from .Mode import Mode
from .morse import (
    CriticalPointRecord,
    Kind,
    PointCloud,
    classify,
    enumerate_critical,
    generalized_gradient,
)
from .offsets import OffsetVerificationReport, verify_morse_consistency
from .show_versions import show_versions
