from typing import Dict, Tuple

import numpy as np

from pointmorse.offsets.SimplicialComplex import SimplicialComplex


def betti(complex: SimplicialComplex) -> Tuple[int, ...]:
    R"""
    Computes the Betti numbers of the complex over Z/2, as

    .. math::

        \beta_k = n_k - \operatorname{rank} \partial_k
                   - \operatorname{rank} \partial_{k + 1},

    where :math:`n_k` counts the k-simplices. The ranks follow from the
    standard column reduction of the boundary matrices.

    Parameters
    ----------
    complex
        Face-closed simplicial complex.

    Returns
    -------
    tuple
        The Betti numbers :math:`\beta_0, \ldots, \beta_{d - 1}`, where
        ``d`` is the dimension up to which the complex is complete.
    """
    ranks = [
        boundary_rank(complex.boundary_matrix(dim))
        for dim in range(complex.max_dim + 1)
    ]

    return tuple(
        complex.num_simplices(dim) - ranks[dim] - ranks[dim + 1]
        for dim in range(complex.max_dim)
    )


def boundary_rank(boundary: np.ndarray) -> int:
    """
    Rank over Z/2 of the given boolean matrix. Columns are reduced left to
    right: while the lowest nonzero entry of a column is also the lowest of
    an earlier reduced column, that column is added (xor) to it. The rank is
    the number of columns that do not reduce to zero.
    """
    columns = np.array(boundary, dtype=bool, copy=True)
    pivots: Dict[int, int] = {}

    for col in range(columns.shape[1]):
        while True:
            nonzero = np.flatnonzero(columns[:, col])

            if nonzero.size == 0:
                break

            low = int(nonzero[-1])

            if low not in pivots:
                pivots[low] = col
                break

            columns[:, col] ^= columns[:, pivots[low]]

    return len(pivots)
