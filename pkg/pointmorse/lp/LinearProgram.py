from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

from pointmorse.linalg.scalars import Scalar, Vector


class Relation(Enum):
    """
    Relation between the left-hand side and right-hand side of a constraint.
    """

    LE = "<="  #: Less than or equal.
    EQ = "=="  #: Equal.
    GE = ">="  #: Greater than or equal.

    def flipped(self) -> "Relation":
        if self == Relation.LE:
            return Relation.GE

        if self == Relation.GE:
            return Relation.LE

        return self


Constraint = Tuple[Vector, Relation, Scalar]


class LinearProgram:
    R"""
    A linear program in the form

    .. math::

        \max \{ c^T x : a_i^T x ~R_i~ b_i ~\forall i,~
                x_j \ge \ell_j ~\forall j \},

    where each relation :math:`R_i` is one of :math:`\le, =, \ge`, and each
    lower bound :math:`\ell_j` is either zero or absent (a free variable).

    Parameters
    ----------
    objective
        The objective vector :math:`c` to maximise.
    constraints
        Constraint rows, each a tuple ``(a, relation, rhs)``. The relation is
        a :class:`Relation` or one of the strings ``"<="``, ``"=="``,
        ``">="``.
    lower_bounds
        Optional per-variable lower bounds, each either 0 or None (free).
        When not passed, all variables are nonnegative.
    """

    def __init__(
        self,
        objective: Sequence[Scalar],
        constraints: Sequence[
            Tuple[Sequence[Scalar], Union[Relation, str], Scalar]
        ],
        lower_bounds: Optional[Sequence[Optional[Scalar]]] = None,
    ):
        num_vars = len(objective)

        if num_vars == 0:
            raise ValueError("Empty objective not understood.")

        if lower_bounds is None:
            lower_bounds = [0] * num_vars

        if len(lower_bounds) != num_vars:
            raise ValueError(
                f"Expected {num_vars} lower bounds, found {len(lower_bounds)}."
            )

        if any(bound is not None and bound != 0 for bound in lower_bounds):
            msg = "Lower bounds other than 0 or None not understood."
            raise ValueError(msg)

        rows: List[Constraint] = []

        for coeffs, relation, rhs in constraints:
            if len(coeffs) != num_vars:
                raise ValueError(
                    f"Constraint with {len(coeffs)} coefficients, expected "
                    f"{num_vars}."
                )

            rows.append((tuple(coeffs), Relation(relation), rhs))

        self._objective = tuple(objective)
        self._constraints = tuple(rows)
        self._lower_bounds = tuple(
            None if bound is None else 0 for bound in lower_bounds
        )

    @property
    def objective(self) -> Vector:
        return self._objective

    @property
    def constraints(self) -> Tuple[Constraint, ...]:
        return self._constraints

    @property
    def lower_bounds(self) -> Tuple[Optional[int], ...]:
        return self._lower_bounds

    @property
    def num_vars(self) -> int:
        return len(self._objective)

    @property
    def num_constraints(self) -> int:
        return len(self._constraints)
