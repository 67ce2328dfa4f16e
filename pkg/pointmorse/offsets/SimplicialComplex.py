from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

Simplex = Tuple[int, ...]


class SimplicialComplex:
    """
    Abstract simplicial complex on the vertices ``0, ..., num_vertices - 1``.
    Every vertex is a 0-simplex of the complex. Higher simplices are sorted
    tuples of vertex indices.

    Parameters
    ----------
    num_vertices
        Number of vertices.
    simplices
        Simplices of positive dimension. The collection must be closed under
        taking faces, and contain no duplicates.
    max_dim
        Dimension up to which the complex is complete. A complex built from a
        cover by truncating its nerve at ``max_dim`` only determines the Betti
        numbers below ``max_dim``. Defaults to one above the largest simplex
        dimension, i.e., no truncation.

    Raises
    ------
    ValueError
        When a simplex is not a sorted tuple of known vertices, is listed
        twice, misses one of its faces, or exceeds ``max_dim``.
    """

    def __init__(
        self,
        num_vertices: int,
        simplices: Iterable[Simplex] = (),
        max_dim: Optional[int] = None,
    ):
        if num_vertices < 0:
            raise ValueError("Negative number of vertices not understood.")

        by_dim: Dict[int, List[Simplex]] = defaultdict(list)
        by_dim[0] = [(vertex,) for vertex in range(num_vertices)]
        seen = set(by_dim[0])

        for simplex in sorted(simplices, key=lambda s: (len(s), s)):
            simplex = tuple(int(vertex) for vertex in simplex)

            if len(simplex) == 1 and simplex in seen:
                continue  # vertices are always present

            if list(simplex) != sorted(set(simplex)):
                raise ValueError(f"Simplex {simplex} not understood.")

            if simplex[0] < 0 or simplex[-1] >= num_vertices:
                raise ValueError(f"Simplex {simplex} has unknown vertices.")

            if simplex in seen:
                raise ValueError(f"Simplex {simplex} is listed twice.")

            if any(face not in seen for face in _facets(simplex)):
                raise ValueError(f"Simplex {simplex} misses faces.")

            seen.add(simplex)
            by_dim[len(simplex) - 1].append(simplex)

        top = max((dim for dim, items in by_dim.items() if items), default=-1)

        if max_dim is None:
            max_dim = top + 1
        elif top > max_dim:
            raise ValueError(f"Simplices above max_dim = {max_dim}.")

        self._num_vertices = num_vertices
        self._simplices = {dim: items for dim, items in by_dim.items()}
        self._index = {
            simplex: idx
            for items in self._simplices.values()
            for idx, simplex in enumerate(items)
        }
        self._max_dim = max_dim

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def max_dim(self) -> int:
        """
        Dimension up to which the complex is complete.
        """
        return self._max_dim

    @property
    def dimension(self) -> int:
        """
        Largest dimension of a simplex in the complex; -1 when empty.
        """
        return max(
            (dim for dim, items in self._simplices.items() if items),
            default=-1,
        )

    def simplices(self, dim: int) -> List[Simplex]:
        """
        The simplices of the given dimension, in lexicographic order.
        """
        return list(self._simplices.get(dim, []))

    def num_simplices(self, dim: int) -> int:
        return len(self._simplices.get(dim, []))

    def __contains__(self, simplex: Simplex) -> bool:
        return tuple(simplex) in self._index

    def __len__(self) -> int:
        return len(self._index)

    def __iter__(self):
        for dim in sorted(self._simplices):
            yield from self._simplices[dim]

    def __repr__(self) -> str:
        counts = [self.num_simplices(dim) for dim in range(self.dimension + 1)]
        return f"SimplicialComplex(num_simplices={counts})"

    def boundary_matrix(self, dim: int) -> np.ndarray:
        """
        Boundary matrix of the ``dim``-simplices over Z/2, as a boolean array
        with one row per ``(dim - 1)``-simplex and one column per
        ``dim``-simplex.
        """
        rows = self.num_simplices(dim - 1) if dim > 0 else 0
        matrix = np.zeros((rows, self.num_simplices(dim)), dtype=bool)

        if dim > 0:
            for col, simplex in enumerate(self.simplices(dim)):
                for face in _facets(simplex):
                    matrix[self._index[face], col] = True

        return matrix

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self._num_vertices <= other.num_vertices and all(
            simplex in other for simplex in self
        )

    def euler_characteristic(self) -> int:
        return sum(
            (-1) ** dim * len(items) for dim, items in self._simplices.items()
        )


def _facets(simplex: Simplex) -> List[Simplex]:
    if len(simplex) <= 1:
        return []

    return list(combinations(simplex, len(simplex) - 1))
