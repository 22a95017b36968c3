# Copyright 2021 - 2024 Universität Tübingen, DKFZ, EMBL, and Universität zu Köln
# for the German Human Genome-Phenome Archive (GHGA)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Borders and pseudo-borders of vertex sets of a Cayley graph.

The border of a set of centers is the symmetric difference of their neighborhoods;
its indicator is ``A(H) · x``. Borders span the code generated by ``A(H)`` and
pseudo-borders, the sets meeting every neighborhood evenly, form its dual.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Self

import numpy as np

from cqc.core.cayley import CayleyGraph
from cqc.core.exceptions import DimensionMismatchError, OddGeneratorCountError
from cqc.core.gf2 import (
    BitMatrix,
    BitVector,
    CosetSearchResult,
    EchelonBasis,
    SearchStatus,
    min_weight_in_coset,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices given by its indicator vector."""

    graph_size: int
    members: BitVector

    def __post_init__(self):
        if self.members.length != self.graph_size:
            raise DimensionMismatchError(
                expected=self.graph_size, observed=self.members.length
            )

    @classmethod
    def from_vertices(cls, graph_size: int, vertices) -> Self:
        """Set of the given vertex ids."""
        return cls(graph_size, BitVector.from_indices(graph_size, vertices))

    @classmethod
    def empty(cls, graph_size: int) -> Self:
        """The empty set."""
        return cls(graph_size, BitVector.zeros(graph_size))

    @property
    def cardinality(self) -> int:
        """Number of members."""
        return self.members.weight()

    def vertices(self) -> list[int]:
        """Sorted member ids."""
        return list(self.members.support())

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.graph_size, self.members ^ other.members)

    def __contains__(self, vertex: int) -> bool:
        return 0 <= vertex < self.graph_size and bool(self.members[vertex])


def _check_size(graph: CayleyGraph, vertex_set: VertexSet):
    if vertex_set.graph_size != graph.vertex_count:
        raise DimensionMismatchError(
            expected=graph.vertex_count, observed=vertex_set.graph_size
        )


def border_of(graph: CayleyGraph, centers: VertexSet) -> VertexSet:
    """Vertices lying in an odd number of neighborhoods of the centers."""
    _check_size(graph, centers)
    indicator = np.zeros(graph.vertex_count, dtype=np.uint8)
    ids = np.array(centers.vertices(), dtype=np.int64)
    for column in graph.spec.columns:
        # translation by a column is a permutation, so no index repeats here
        indicator[ids ^ column] ^= 1
    packed = BitMatrix.from_dense(indicator[np.newaxis, :]).row(0)
    return VertexSet(graph.vertex_count, packed)


class AdjacencyRowSpace:
    """Row space of ``A(H)``, grown one neighborhood at a time until a query is
    settled.
    """

    def __init__(self, graph: CayleyGraph):
        self._graph = graph
        self._basis = EchelonBasis(graph.vertex_count)
        self._next_row = 0

    @property
    def rows_added(self) -> int:
        """Number of neighborhoods inserted so far."""
        return self._next_row

    def contains(self, indicator: int) -> bool:
        """Whether the integer-encoded indicator is a sum of neighborhoods."""
        residual = self._basis.reduce_int(indicator)
        while residual and self._next_row < self._graph.vertex_count:
            self._basis.add_int(self._graph.neighborhood_int(self._next_row))
            self._next_row += 1
            residual = self._basis.reduce_int(residual)
        return residual == 0


@lru_cache(maxsize=16)
def _row_space(graph: CayleyGraph) -> AdjacencyRowSpace:
    return AdjacencyRowSpace(graph)


def is_border(graph: CayleyGraph, vertex_set: VertexSet) -> bool:
    """Whether ``vertex_set`` is the border of some set of centers."""
    _check_size(graph, vertex_set)
    return _row_space(graph).contains(vertex_set.members.to_int())


def is_pseudo_border(graph: CayleyGraph, vertex_set: VertexSet) -> bool:
    """Whether every neighborhood meets ``vertex_set`` in an even number of vertices."""
    return border_of(graph, vertex_set).cardinality == 0


@dataclass(frozen=True)
class BorderSearch:
    """Smallest pseudo-border that is not a border."""

    search: CosetSearchResult
    witness: VertexSet | None

    @property
    def status(self) -> SearchStatus:
        """Search outcome."""
        return self.search.status

    @property
    def size(self) -> int | None:
        """Cardinality of the witness."""
        return self.search.weight


def min_pseudo_border_not_border(
    graph: CayleyGraph, cap: int | None = None, **search_options
) -> BorderSearch:
    """Search the least cardinality of a pseudo-border that is not a border.

    ``none-exists`` means the quotient of pseudo-borders by borders is trivial,
    which is a rank statement and independent of ``cap``.
    """
    if graph.degree % 2:
        raise OddGeneratorCountError(n=graph.degree)
    adjacency = graph.adjacency_matrix()
    search = min_weight_in_coset(adjacency, adjacency, cap, **search_options)
    if search.witness is None:
        log.info(f"No pseudo-border outside the borders found: {search.status}.")
        return BorderSearch(search=search, witness=None)

    witness = VertexSet(graph.vertex_count, search.witness)
    if not is_pseudo_border(graph, witness) or is_border(graph, witness):
        raise RuntimeError(f"Search returned an invalid witness {witness.vertices()}.")
    log.info(f"Smallest pseudo-border outside the borders has size {search.weight}.")
    return BorderSearch(search=search, witness=witness)
