from fractions import Fraction
from typing import Iterable, Union

from pointmorse.Mode import Mode
from pointmorse.linalg.scalars import (
    Scalar,
    Vector,
    format_scalar,
    parse_scalar,
)

_Number = Union[int, float, Fraction, str]


class Kernel:
    """
    Number kernel shared by all geometric operations. The kernel fixes the
    number mode, converts inputs into that mode, and decides signs and
    comparisons: exactly for rationals, and up to an absolute and relative
    tolerance for floats.

    Parameters
    ----------
    mode
        The number mode. Default exact.
    rtol
        Relative tolerance for float comparisons, applied to the magnitude of
        the compared quantities (and, for projection sets, to squared
        distances). Default 1e-9. Ignored in exact mode.
    atol
        Absolute tolerance for float comparisons. Default 1e-12. Ignored in
        exact mode.
    """

    def __init__(
        self, mode: Mode = Mode.EXACT, rtol: float = 1e-9, atol: float = 1e-12
    ):
        if rtol < 0 or atol < 0:
            raise ValueError("Negative tolerances not understood.")

        self._mode = Mode(mode)
        self._rtol = rtol
        self._atol = atol

    @property
    def mode(self) -> Mode:
        return self._mode

    @property
    def rtol(self) -> float:
        return self._rtol

    @property
    def atol(self) -> float:
        return self._atol

    @property
    def is_exact(self) -> bool:
        return self._mode == Mode.EXACT

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_exact else 0.0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_exact else 1.0

    def __repr__(self) -> str:
        return (
            f"Kernel(mode={self._mode.name}, rtol={self._rtol}, "
            f"atol={self._atol})"
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Kernel) and (
            (self._mode, self._rtol, self._atol)
            == (other._mode, other._rtol, other._atol)
        )

    def __hash__(self) -> int:
        return hash((self._mode, self._rtol, self._atol))

    def convert(self, value: _Number) -> Scalar:
        """
        Converts a number (or numeric literal) into this kernel's mode. Floats
        converted to exact mode keep their exact binary value.
        """
        if isinstance(value, str):
            return parse_scalar(value, self._mode)

        return Fraction(value) if self.is_exact else float(value)

    def vector(self, values: Iterable[_Number]) -> Vector:
        return tuple(self.convert(value) for value in values)

    def parse(self, text: str) -> Scalar:
        return parse_scalar(text, self._mode)

    def format(self, value: Scalar) -> str:
        return format_scalar(value)

    def sign(self, value: Scalar, scale: Scalar = 0) -> int:
        """
        Sign of ``value``, in {-1, 0, 1}. In float mode, values within
        ``atol + rtol * |scale|`` of zero have sign zero.
        """
        if not self.is_exact:
            if abs(value) <= self._atol + self._rtol * abs(scale):
                return 0

        return int(value > 0) - int(value < 0)

    def is_zero(self, value: Scalar, scale: Scalar = 0) -> bool:
        return self.sign(value, scale) == 0

    def compare(self, first: Scalar, second: Scalar) -> int:
        """
        Three-way comparison of two scalars: -1, 0 or 1 when ``first`` is
        smaller than, equal to, or larger than ``second``.
        """
        scale = max(abs(first), abs(second))
        return self.sign(first - second, scale)

    def to_float(self, value: Scalar) -> float:
        return float(value)
