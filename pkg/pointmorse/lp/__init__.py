from .LPOutcome import LPOutcome, LPStatus
from .LinearProgram import LinearProgram, Relation
from .simplex import solve_lp
