import logging
from typing import List, Optional, Sequence, Set

from pointmorse.Kernel import Kernel
from pointmorse.linalg.scalars import Scalar
from pointmorse.lp.LinearProgram import LinearProgram, Relation
from pointmorse.lp.LPOutcome import LPOutcome, LPStatus

logger = logging.getLogger(__name__)


class _Tableau:
    """
    Dense simplex tableau ``[A | b]`` with an explicit basis. Reduced costs
    are recomputed from the cost vector in each iteration, so the same
    tableau serves both phases.
    """

    def __init__(
        self,
        rows: List[List[Scalar]],
        rhs: List[Scalar],
        basis: List[int],
        num_cols: int,
        kernel: Kernel,
    ):
        self.rows = rows
        self.num_cols = num_cols
        self.rhs = rhs
        self.basis = basis
        self.kernel = kernel

        entries = [abs(a) for row in rows for a in row]
        entries += [abs(b) for b in rhs]
        self.magnitude = max(entries, default=0)

    def pivot(self, row_idx: int, col: int):
        logger.debug(
            f"Pivot: column {col} enters, column {self.basis[row_idx]} leaves."
        )

        pivot_row = self.rows[row_idx]
        pivot = pivot_row[col]
        self.rows[row_idx] = [a / pivot for a in pivot_row]
        self.rhs[row_idx] /= pivot

        for idx, row in enumerate(self.rows):
            factor = row[col]

            if idx == row_idx or factor == 0:
                continue

            self.rows[idx] = [
                a - factor * b for a, b in zip(row, self.rows[row_idx])
            ]
            self.rhs[idx] -= factor * self.rhs[row_idx]

        self.basis[row_idx] = col

    def optimise(self, cost: Sequence[Scalar], allowed: Set[int]) -> LPStatus:
        """
        Maximises ``cost`` over the tableau from the current basic feasible
        solution, using Bland's rule for both the entering and the leaving
        variable. Only columns in ``allowed`` may enter the basis.
        """
        sign = self.kernel.sign
        in_basis = set(self.basis)

        while True:
            entering: Optional[int] = None

            for col in range(self.num_cols):
                if col in in_basis or col not in allowed:
                    continue

                reduced = cost[col] - sum(
                    cost[basic] * row[col]
                    for basic, row in zip(self.basis, self.rows)
                )

                if sign(reduced, self.magnitude) > 0:
                    entering = col
                    break

            if entering is None:
                return LPStatus.OPTIMAL

            leaving: Optional[int] = None
            best_ratio: Optional[Scalar] = None

            for idx, row in enumerate(self.rows):
                if sign(row[entering], self.magnitude) <= 0:
                    continue

                ratio = self.rhs[idx] / row[entering]

                if (
                    leaving is None
                    or self.kernel.compare(ratio, best_ratio) < 0
                    or (
                        self.kernel.compare(ratio, best_ratio) == 0
                        and self.basis[idx] < self.basis[leaving]
                    )
                ):
                    leaving, best_ratio = idx, ratio

            if leaving is None:
                return LPStatus.UNBOUNDED

            in_basis.discard(self.basis[leaving])
            in_basis.add(entering)
            self.pivot(leaving, entering)

    def value(self, cost: Sequence[Scalar]) -> Scalar:
        return sum(
            (cost[basic] * b for basic, b in zip(self.basis, self.rhs)),
            self.kernel.zero,
        )

    def solution(self) -> List[Scalar]:
        values = [self.kernel.zero] * self.num_cols

        for basic, b in zip(self.basis, self.rhs):
            values[basic] = b

        return values


def solve_lp(lp: LinearProgram, kernel: Optional[Kernel] = None) -> LPOutcome:
    """
    Solves the given linear program with the two-phase simplex method.

    Free variables are split as differences of two nonnegative variables.
    Each ``<=`` row receives a slack variable, each ``>=`` row a surplus and
    an artificial variable, and each ``=`` row an artificial variable. The
    first phase minimises the sum of the artificial variables; the second
    optimises the original objective. Bland's rule is always used, which
    prevents cycling on the degenerate programs that arise from
    non-generic geometry.

    Parameters
    ----------
    lp
        The linear program to solve.
    kernel
        Optional number kernel. Exact when not passed. In exact mode the
        optimum is exact; in float mode every sign test uses the kernel
        tolerances.

    Returns
    -------
    LPOutcome
        The status, and for optimal programs an optimal primal solution and
        the objective value. The result is deterministic given the input
        ordering.
    """
    if kernel is None:
        kernel = Kernel()

    zero, one = kernel.zero, kernel.one

    # Maps each original variable to its (column, sign) parts.
    parts = []
    num_structural = 0

    for bound in lp.lower_bounds:
        if bound is None:
            parts.append(((num_structural, 1), (num_structural + 1, -1)))
            num_structural += 2
        else:
            parts.append(((num_structural, 1),))
            num_structural += 1

    normalised = []

    for coeffs, relation, rhs in lp.constraints:
        row = [zero] * num_structural

        for var, value in enumerate(coeffs):
            for col, sign in parts[var]:
                row[col] += sign * kernel.convert(value)

        rhs = kernel.convert(rhs)

        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
            relation = relation.flipped()

        normalised.append((row, relation, rhs))

    num_slack = sum(rel != Relation.EQ for _, rel, _ in normalised)
    num_artificial = sum(rel != Relation.LE for _, rel, _ in normalised)
    num_cols = num_structural + num_slack + num_artificial

    rows, rhs_values, basis = [], [], []
    slack_col = num_structural
    artificial_col = num_structural + num_slack
    artificials = set()

    for row, relation, rhs in normalised:
        full = row + [zero] * (num_slack + num_artificial)

        if relation == Relation.LE:
            full[slack_col] = one
            basis.append(slack_col)
            slack_col += 1
        else:
            if relation == Relation.GE:
                full[slack_col] = -one
                slack_col += 1

            full[artificial_col] = one
            basis.append(artificial_col)
            artificials.add(artificial_col)
            artificial_col += 1

        rows.append(full)
        rhs_values.append(rhs)

    tableau = _Tableau(rows, rhs_values, basis, num_cols, kernel)

    if artificials:
        phase_one = [
            -one if col in artificials else zero for col in range(num_cols)
        ]
        tableau.optimise(phase_one, set(range(num_cols)))

        if kernel.sign(tableau.value(phase_one), tableau.magnitude) < 0:
            logger.debug("Phase one ended with positive infeasibility.")
            return LPOutcome(LPStatus.INFEASIBLE)

        _drive_out_artificials(tableau, artificials)

    cost = [zero] * num_cols

    for var, value in enumerate(lp.objective):
        for col, sign in parts[var]:
            cost[col] = sign * kernel.convert(value)

    allowed = set(range(num_cols)) - artificials
    status = tableau.optimise(cost, allowed)

    if status == LPStatus.UNBOUNDED:
        return LPOutcome(LPStatus.UNBOUNDED)

    values = tableau.solution()
    primal = tuple(
        sum((sign * values[col] for col, sign in var_parts), zero)
        for var_parts in parts
    )

    objective = sum(
        (kernel.convert(c) * x for c, x in zip(lp.objective, primal)), zero
    )

    return LPOutcome(LPStatus.OPTIMAL, primal, objective)


def _drive_out_artificials(tableau: _Tableau, artificials: Set[int]):
    """
    Pivots artificial variables that remain basic (at level zero) out of the
    basis after the first phase. Rows in which no other column has a nonzero
    entry are redundant, and are removed.
    """
    idx = 0

    while idx < len(tableau.rows):
        if tableau.basis[idx] not in artificials:
            idx += 1
            continue

        row = tableau.rows[idx]
        col = next(
            (
                col
                for col, value in enumerate(row)
                if col not in artificials
                and not tableau.kernel.is_zero(value, tableau.magnitude)
            ),
            None,
        )

        if col is None:
            logger.debug(f"Removing redundant constraint row {idx}.")
            del tableau.rows[idx]
            del tableau.rhs[idx]
            del tableau.basis[idx]
            continue

        tableau.pivot(idx, col)
        idx += 1
