from .Ball import Ball
from .ConeTestResult import ConeOutcome, ConeTestResult
from .HullMembership import HullMembership
from .MinNormPoint import MinNormPoint
from .balls import (
    circumcenter_in_affine_hull,
    has_empty_sphere,
    min_enclosing_ball,
)
from .cones import positive_span_test
from .hull import conv_contains
from .wolfe import min_norm_point
