import re
from fractions import Fraction
from typing import Sequence, Tuple, Union

from pointmorse.Mode import Mode

Scalar = Union[Fraction, float]
Vector = Tuple[Scalar, ...]

_LITERAL = re.compile(
    r"""
    [+-]?
    (?:
        \d+/\d+                         # fraction p/q
      | (?:\d+\.?\d*|\.\d+)             # integer or decimal
        (?:[eE](?P<exponent>[+-]?\d+))?  # optional exponent
    )
    """,
    re.VERBOSE,
)

# Larger exponents would make Fraction build enormous powers of ten.
_MAX_EXPONENT = 400


def parse_scalar(text: str, mode: Mode = Mode.EXACT) -> Scalar:
    """
    Parses a numeric literal. Integers, fractions ``p/q`` and decimals (with
    an optional exponent) are understood. In exact mode decimals are parsed
    as the exact decimal fraction they denote, so ``"0.25"`` becomes
    ``Fraction(1, 4)``; in float mode the result is the nearest binary64.

    Parameters
    ----------
    text
        The literal to parse. Surrounding whitespace is ignored.
    mode
        The number mode to parse into.

    Raises
    ------
    ValueError
        When the literal is malformed, has a zero denominator, or has an
        exponent larger than 400 in magnitude.

    Returns
    -------
    Scalar
        A ``Fraction`` in exact mode, a ``float`` otherwise.

    Examples
    --------
    >>> parse_scalar("-1/2")
    Fraction(-1, 2)
    >>> parse_scalar("0.25", Mode.FLOAT)
    0.25
    """
    literal = text.strip()

    match = _LITERAL.fullmatch(literal)

    if not match:
        raise ValueError(f"Literal '{text}' not understood.")

    exponent = match.group("exponent")

    if exponent is not None and abs(int(exponent)) > _MAX_EXPONENT:
        msg = f"Literal '{text}' has an exponent beyond {_MAX_EXPONENT}."
        raise ValueError(msg)

    try:
        value = Fraction(literal)
    except ZeroDivisionError:
        raise ValueError(f"Literal '{text}' has a zero denominator.")

    if mode == Mode.EXACT:
        return value

    try:
        return float(value)
    except OverflowError:
        raise ValueError(f"Literal '{text}' overflows a float.")


def format_scalar(value: Scalar) -> str:
    """
    Canonical string form of a scalar. Exact values are written as ``"p/q"``
    with ``q > 0`` and ``gcd(p, q) = 1``, even when ``q = 1``; floats use
    their shortest round-tripping representation. Either form is read back
    by :func:`parse_scalar`.
    """
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"

    if isinstance(value, int):
        return f"{value}/1"

    return repr(float(value))


def format_vector(values: Sequence[Scalar]) -> Tuple[str, ...]:
    return tuple(format_scalar(value) for value in values)
