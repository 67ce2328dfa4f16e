from __future__ import annotations

from typing import TYPE_CHECKING, List, Optional, Sequence

from pointmorse.linalg.scalars import Scalar, Vector

if TYPE_CHECKING:
    from pointmorse.Kernel import Kernel


def solve_linear(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], kernel: Kernel
) -> Optional[Vector]:
    """
    Finds one solution ``x`` of the linear system ``A x = b`` by Gauss-Jordan
    elimination. Free variables are set to zero, so underdetermined systems
    return one particular solution. In exact mode consistency is decided
    exactly; in float mode the pivot in each column is the entry of largest
    magnitude, and entries within tolerance of zero are treated as zero.

    Parameters
    ----------
    matrix
        The ``r x c`` coefficient matrix ``A``, as a sequence of rows.
    rhs
        The right-hand side ``b``, of length ``r``.
    kernel
        The number kernel.

    Raises
    ------
    ValueError
        When the dimensions of ``A`` and ``b`` do not match.

    Returns
    -------
    Optional[Vector]
        A solution when the system is consistent, None otherwise.
    """
    if len(matrix) != len(rhs):
        raise ValueError(
            f"Matrix with {len(matrix)} rows and right-hand side of length "
            f"{len(rhs)} not understood."
        )

    num_cols = len(matrix[0]) if matrix else 0

    if any(len(row) != num_cols for row in matrix):
        raise ValueError("Ragged matrix rows not understood.")

    rows: List[List[Scalar]] = [
        [kernel.convert(a) for a in row] + [kernel.convert(b)]
        for row, b in zip(matrix, rhs)
    ]

    magnitude = max((abs(a) for row in rows for a in row), default=0)
    pivot_cols: List[int] = []
    rank = 0

    for col in range(num_cols):
        candidates = [
            idx
            for idx in range(rank, len(rows))
            if not kernel.is_zero(rows[idx][col], magnitude)
        ]

        if not candidates:
            continue

        if kernel.is_exact:
            best = candidates[0]
        else:
            best = max(candidates, key=lambda idx: abs(rows[idx][col]))

        rows[rank], rows[best] = rows[best], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [a / pivot for a in rows[rank]]

        for idx, row in enumerate(rows):
            if idx != rank and row[col] != 0:
                factor = row[col]
                rows[idx] = [a - factor * b for a, b in zip(row, rows[rank])]

        pivot_cols.append(col)
        rank += 1

    for row in rows[rank:]:
        if not kernel.is_zero(row[-1], magnitude):
            return None

    solution = [kernel.zero] * num_cols

    for row, col in zip(rows, pivot_cols):
        solution[col] = row[-1]

    return tuple(solution)
