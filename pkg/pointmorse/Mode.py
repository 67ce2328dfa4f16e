from enum import IntEnum


class Mode(IntEnum):
    """
    Enum of number modes. All geometry is generic over the mode: exact
    rationals carry the contract, floats exist for plotting and numerical
    cross-checks.
    """

    EXACT = 0  #: Exact rationals (``fractions.Fraction``).
    FLOAT = 1  #: Binary64 floats compared with tolerances.
