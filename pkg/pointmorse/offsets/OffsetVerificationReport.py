from dataclasses import dataclass
from typing import Optional, Tuple

from pointmorse.linalg.scalars import Scalar

Betti = Tuple[int, ...]


@dataclass(frozen=True)
class Crossing:
    """
    Change in the offsets' Betti numbers across a topological critical value.

    Attributes
    ----------
    squared_value
        The squared critical value.
    indices
        Indices of the topological critical records at this value.
    before
        Betti numbers just below the value. All zero for the seed crossing at
        value zero, where the offset is empty just before.
    after
        Betti numbers just above the value.
    expected_euler
        Sum of :math:`(-1)^m` over the indices ``m``.
    """

    squared_value: Scalar
    indices: Tuple[int, ...]
    before: Betti
    after: Betti
    expected_euler: int

    @property
    def delta(self) -> Betti:
        return tuple(b - a for a, b in zip(self.before, self.after))

    @property
    def delta_euler(self) -> int:
        delta = self.delta
        return sum((-1) ** dim * change for dim, change in enumerate(delta))

    @property
    def euler_passed(self) -> bool:
        """
        Whether the Euler characteristic changes by the signed count of the
        critical points at this value.
        """
        return self.delta_euler == self.expected_euler

    @property
    def handle_passed(self) -> Optional[bool]:
        R"""
        For a single critical point of index ``m``: whether exactly one Betti
        number changes, either :math:`\beta_m` up by one or
        :math:`\beta_{m - 1}` down by one. None when several critical points
        share this value.
        """
        if len(self.indices) != 1:
            return None

        index = self.indices[0]
        delta = self.delta
        changed = [dim for dim, change in enumerate(delta) if change != 0]

        if changed == [index]:
            return delta[index] == 1

        if changed == [index - 1]:
            return delta[index - 1] == -1

        return False


@dataclass(frozen=True)
class RegularCrossing:
    """
    Betti numbers around a value at which the distance function has only
    differential critical points that are topologically regular. The offsets
    do not change topology there, so both sides must agree.
    """

    squared_value: Scalar
    before: Betti
    after: Betti

    @property
    def passed(self) -> bool:
        return self.before == self.after


@dataclass(frozen=True)
class OffsetVerificationReport:
    """
    Outcome of checking the topology of a cloud's offsets against its
    critical points.

    Attributes
    ----------
    critical_values
        Sorted, distinct squared values of the topological critical points.
    samples
        One squared radius inside each open interval between consecutive
        critical values, and one beyond the last.
    betti
        Betti numbers of the offsets at each sample.
    crossings
        One crossing per critical value.
    regular_crossings
        One entry per value with only topologically regular differential
        critical points.
    """

    critical_values: Tuple[Scalar, ...]
    samples: Tuple[Scalar, ...]
    betti: Tuple[Betti, ...]
    crossings: Tuple[Crossing, ...]
    regular_crossings: Tuple[RegularCrossing, ...]

    @property
    def isotopy_passed(self) -> bool:
        return all(crossing.passed for crossing in self.regular_crossings)

    @property
    def euler_passed(self) -> bool:
        return all(crossing.euler_passed for crossing in self.crossings)

    @property
    def handle_passed(self) -> bool:
        return all(
            crossing.handle_passed is not False for crossing in self.crossings
        )

    @property
    def terminal_contractible(self) -> bool:
        last = self.betti[-1]
        return last[:1] == (1,) and not any(last[1:])

    @property
    def passed(self) -> bool:
        return (
            self.isotopy_passed
            and self.euler_passed
            and self.handle_passed
            and self.terminal_contractible
        )
