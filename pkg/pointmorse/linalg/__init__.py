from .SpanBasis import SpanBasis
from .rank import rank_and_basis
from .scalars import Scalar, Vector, format_scalar, format_vector, parse_scalar
from .solve import solve_linear
from .vectors import (
    add,
    combine,
    dot,
    scale,
    squared_dist,
    squared_norm,
    sub,
)
