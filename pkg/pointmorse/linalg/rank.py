from __future__ import annotations

import bisect
import logging
from typing import TYPE_CHECKING, List, Sequence

import numpy as np

from pointmorse.linalg.SpanBasis import SpanBasis
from pointmorse.linalg.scalars import Vector
from pointmorse.linalg.vectors import integer_row, primitive

if TYPE_CHECKING:
    from pointmorse.Kernel import Kernel

logger = logging.getLogger(__name__)


def rank_and_basis(vectors: Sequence[Vector], kernel: Kernel) -> SpanBasis:
    """
    Computes the rank of the given vectors and a basis of their span. The
    basis consists of the first linearly independent vectors in input order,
    so the result is deterministic given that order.

    In exact mode the rank is decided by fraction-free elimination over the
    integers: each vector is scaled to a primitive integer row, and reduced
    against the echelon rows found so far by cross-multiplication followed by
    content removal, which keeps the entries small. In float mode a vector is
    independent when its residual after projecting out the current basis is
    not small relative to its norm.

    Parameters
    ----------
    vectors
        Vectors sharing the ambient dimension. May be empty.
    kernel
        The number kernel.

    Raises
    ------
    ValueError
        When the vectors do not share one dimension.

    Returns
    -------
    SpanBasis
        The rank and a basis of the span. Empty input gives rank zero.
    """
    if not vectors:
        return SpanBasis(0, (), 0)

    ambient = len(vectors[0])

    if any(len(vector) != ambient for vector in vectors):
        raise ValueError("Vectors of different dimensions not understood.")

    if kernel.is_exact:
        independent = _independent_exact(vectors)
    else:
        independent = _independent_float(vectors, kernel)

    basis = tuple(tuple(vectors[idx]) for idx in independent)
    return SpanBasis(len(basis), basis, ambient)


def _independent_exact(vectors: Sequence[Vector]) -> List[int]:
    # Echelon rows are kept sorted by pivot column. A row has zeros in every
    # column before its pivot, so reducing in pivot order never reintroduces
    # an entry that was eliminated before.
    pivots: List[int] = []
    echelon: List[List[int]] = []
    independent = []

    for idx, vector in enumerate(vectors):
        if not any(vector):
            logger.debug(f"Vector {idx} is zero.")
            continue

        row = integer_row(vector)

        for col, echelon_row in zip(pivots, echelon):
            if row[col] != 0:
                pivot, entry = echelon_row[col], row[col]
                row = [a * pivot - b * entry for a, b in zip(row, echelon_row)]

                if not any(row):
                    break

                row = primitive(row)

        if not any(row):
            logger.debug(f"Vector {idx} depends on its predecessors.")
            continue

        col = next(col for col, value in enumerate(row) if value != 0)
        where = bisect.bisect(pivots, col)
        pivots.insert(where, col)
        echelon.insert(where, row)
        independent.append(idx)

    return independent


def _independent_float(vectors: Sequence[Vector], kernel: Kernel) -> List[int]:
    orthonormal: List[np.ndarray] = []
    independent = []

    for idx, vector in enumerate(vectors):
        original = np.asarray(vector, dtype=float)
        residual = original.copy()

        for direction in orthonormal:
            residual -= (residual @ direction) * direction

        norm = float(np.linalg.norm(residual))

        if not kernel.is_zero(norm, float(np.linalg.norm(original))):
            orthonormal.append(residual / norm)
            independent.append(idx)

    return independent
