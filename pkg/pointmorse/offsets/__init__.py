from .CechFiltration import CechFiltration, cech_complex
from .OffsetVerificationReport import (
    Crossing,
    OffsetVerificationReport,
    RegularCrossing,
)
from .SimplicialComplex import SimplicialComplex
from .betti import betti, boundary_rank
from .verify import verify_morse_consistency
