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

"""Cayley graphs of F2^r generated by the columns of a parity-check matrix.

A vertex is an integer ``0 <= v < 2**r``; bit ``i`` of ``v`` is the coordinate in
row ``i`` of the generator matrix. Column ``j`` is encoded the same way, so the
neighbors of ``v`` are ``v ^ column`` for every column.
"""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Self

import numpy as np

from cqc.core.exceptions import (
    GeneratorValidationError,
    ParameterRangeError,
    ResourceLimitError,
)
from cqc.core.gf2 import (
    BitMatrix,
    BitVector,
    CosetSearchResult,
    EchelonBasis,
    SearchStatus,
    min_weight_in_coset,
    rank,
    transpose,
)
from cqc.core.models import BallVertex, BallView

log = logging.getLogger(__name__)

DEFAULT_MAX_R = 20
DEFAULT_DENSE_MAX_R = 14
DEFAULT_DISTANCE_CAP = 20


@dataclass(frozen=True)
class GeneratorSpec:
    """Parity-check matrix whose columns generate F2^r.

    Columns must be nonzero and pairwise distinct and the matrix must have full row
    rank. Column numbers in error messages count from 1.
    """

    h: BitMatrix

    def __post_init__(self):
        if self.h.rows < 1 or self.h.cols < 1:
            raise GeneratorValidationError(
                reason=f"the matrix must not be empty, got {self.h.rows}x{self.h.cols}"
            )
        first_seen: dict[int, int] = {}
        for index, column in enumerate(self.columns, start=1):
            if column == 0:
                raise GeneratorValidationError(column=index, reason="zero column")
            if column in first_seen:
                raise GeneratorValidationError(
                    column=index, reason=f"duplicate of column {first_seen[column]}"
                )
            first_seen[column] = index
        observed = rank(self.h)
        if observed < self.r:
            raise GeneratorValidationError(
                reason=f"rank {observed} is below r = {self.r}, the columns do not"
                + " generate F2^r"
            )

    @classmethod
    def from_columns(cls, r: int, columns: Sequence[int]) -> Self:
        """Spec from integer-encoded columns."""
        return cls(transpose(BitMatrix.from_int_rows(list(columns), r)))

    @classmethod
    def identity(cls, n: int) -> Self:
        """The identity matrix, whose Cayley graph is the hypercube of dimension n."""
        return cls(BitMatrix.identity(n))

    @property
    def r(self) -> int:
        """Number of rows."""
        return self.h.rows

    @property
    def n(self) -> int:
        """Number of columns, the degree of the Cayley graph."""
        return self.h.cols

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Integer encodings of the columns."""
        return tuple(transpose(self.h).to_int_rows())

    @property
    def column_vectors(self) -> tuple[BitVector, ...]:
        """The columns as vectors of length r."""
        return tuple(BitVector.from_int(self.r, column) for column in self.columns)


@dataclass(frozen=True)
class LocalIsomorphism:
    """Canonical map from a ball of the Cayley graph to a ball of the hypercube.

    ``ok`` requires a bijection onto the hypercube ball that carries the
    neighborhood of every vertex closer than ``radius`` to the center onto the
    hypercube neighborhood of its image. ``boundary_extra_edges`` counts the edges
    between two vertices at distance exactly ``radius``; each one is a relation of
    length ``2 * radius + 1`` and has no hypercube counterpart.
    """

    center: int
    radius: int
    mapping: dict[int, BitVector]
    well_defined: bool
    bijective: bool
    interior_edges_ok: bool
    boundary_extra_edges: int

    @property
    def ok(self) -> bool:
        """Whether the map is an isomorphism of the ball interiors."""
        return self.well_defined and self.bijective and self.interior_edges_ok

    @property
    def induced_isomorphic(self) -> bool:
        """Whether the induced subgraphs including the boundary are isomorphic."""
        return self.ok and self.boundary_extra_edges == 0


@dataclass(frozen=True)
class CayleyGraph:
    """The Cayley graph G(H) with implicit adjacency."""

    spec: GeneratorSpec
    dense_max_r: int = field(default=DEFAULT_DENSE_MAX_R, compare=False)

    @property
    def vertex_count(self) -> int:
        """``2**r``"""
        return 1 << self.spec.r

    @property
    def degree(self) -> int:
        """Every vertex has exactly ``n`` neighbors."""
        return self.spec.n

    def _check_vertex(self, vertex: int):
        if not 0 <= vertex < self.vertex_count:
            raise IndexError(
                f"Vertex {vertex} out of range for a graph on {self.vertex_count}"
                + " vertices."
            )

    def neighbors(self, vertex: int) -> list[int]:
        """The ``n`` neighbors of ``vertex`` in column order."""
        self._check_vertex(vertex)
        return [vertex ^ column for column in self.spec.columns]

    def neighborhood_int(self, vertex: int) -> int:
        """Indicator of the neighbors of ``vertex`` as an integer."""
        self._check_vertex(vertex)
        indicator = 0
        for column in self.spec.columns:
            indicator |= 1 << (vertex ^ column)
        return indicator

    def adjacency_matrix(self) -> BitMatrix:
        """The dense adjacency matrix A(H)."""
        if self.spec.r > self.dense_max_r:
            raise ResourceLimitError(
                what="Dense adjacency matrix with r",
                size=self.spec.r,
                limit=self.dense_max_r,
                advice="Use the implicit adjacency operations (neighbors, border_of,"
                + " is_border) instead.",
            )
        size = self.vertex_count
        n_words = (size + 63) // 64
        data = np.zeros((size, n_words), dtype=np.uint64)
        vertices = np.arange(size, dtype=np.int64)
        for column in self.spec.columns:
            targets = vertices ^ column
            # one bit per row and column, so the fancy-indexed update is collision free
            data[vertices, targets // 64] |= np.left_shift(
                np.uint64(1), (targets % 64).astype(np.uint64)
            )
        return BitMatrix(size, size, data)

    def is_self_orthogonal(self) -> bool:
        """Whether every two rows of A(H) overlap evenly.

        ``|N(u) ∩ N(v)|`` only depends on ``u ^ v`` and equals the number of
        ordered column pairs with that sum, so the check runs over column pairs.
        """
        columns = self.spec.columns
        overlaps = Counter(a ^ b for a in columns for b in columns)
        return all(count % 2 == 0 for count in overlaps.values())

    def ball(self, center: int, radius: int) -> BallView:
        """Breadth-first ball around ``center`` with its induced edges."""
        self._check_vertex(center)
        if radius < 0:
            raise ParameterRangeError(
                name="radius", value=radius, requirement="must be non-negative"
            )
        depth = self._bfs_depths(center, radius)
        edges = sorted(
            (vertex, vertex ^ column)
            for vertex in depth
            for column in self.spec.columns
            if vertex < vertex ^ column and vertex ^ column in depth
        )
        return BallView(
            center=center,
            radius=radius,
            vertices=[
                BallVertex(vertex=vertex, depth=depth[vertex])
                for vertex in sorted(depth)
            ],
            edges=edges,
        )

    def _bfs_depths(self, center: int, radius: int) -> dict[int, int]:
        depth = {center: 0}
        frontier = [center]
        for level in range(1, radius + 1):
            following = []
            for vertex in frontier:
                for column in self.spec.columns:
                    target = vertex ^ column
                    if target not in depth:
                        depth[target] = level
                        following.append(target)
            frontier = following
        return depth


def build_graph(
    spec: GeneratorSpec,
    *,
    max_r: int = DEFAULT_MAX_R,
    dense_max_r: int = DEFAULT_DENSE_MAX_R,
) -> CayleyGraph:
    """The Cayley graph of ``spec``; nothing of size ``2**r`` is materialized."""
    if spec.r > max_r:
        raise ResourceLimitError(what="Cayley graph with r", size=spec.r, limit=max_r)
    log.debug(f"Cayley graph on {1 << spec.r} vertices of degree {spec.n}.")
    return CayleyGraph(spec=spec, dense_max_r=dense_max_r)


def classical_distance(
    spec: GeneratorSpec, cap: int | None = None, **search_options
) -> CosetSearchResult:
    """Shortest column dependency of ``spec.h``, searched up to ``cap``."""
    cap = min(spec.n, DEFAULT_DISTANCE_CAP) if cap is None else cap
    return min_weight_in_coset(
        spec.h, BitMatrix.zeros(0, spec.n), cap, **search_options
    )


def local_radius(distance: CosetSearchResult, n: int) -> int:
    """Largest radius the distance guarantees; ``n`` if the columns are independent."""
    lower = distance.lower_bound
    if distance.status is SearchStatus.NONE_EXISTS or lower is None:
        return n
    return (lower - 1) // 2


def verify_local_isomorphism(
    spec: GeneratorSpec,
    center: int,
    *,
    radius: int | None = None,
    distance: CosetSearchResult | None = None,
) -> LocalIsomorphism:
    """Map the ball around ``center`` to the hypercube ball around the empty set.

    The vertex ``center ^ c_{i_1} ^ ... ^ c_{i_k}`` reached along a geodesic maps to
    the subset ``{i_1, ..., i_k}``. ``radius`` is capped by what the classical
    distance guarantees.
    """
    graph = CayleyGraph(spec=spec)
    graph._check_vertex(center)
    if distance is None:
        distance = classical_distance(spec)
    allowed = local_radius(distance, spec.n)
    radius = allowed if radius is None else min(radius, allowed)

    columns = spec.columns
    depth = {center: 0}
    image = {center: 0}
    well_defined = True
    frontier = [center]
    for level in range(1, radius + 1):
        following = []
        for vertex in frontier:
            for index, column in enumerate(columns):
                if image[vertex] >> index & 1:
                    continue
                target = vertex ^ column
                candidate = image[vertex] | 1 << index
                if target not in depth:
                    depth[target] = level
                    image[target] = candidate
                    following.append(target)
                elif depth[target] == level and image[target] != candidate:
                    well_defined = False
        frontier = following

    images = set(image.values())
    expected = sum(comb(spec.n, i) for i in range(radius + 1))
    bijective = len(images) == len(image) == expected
    interior_edges_ok = all(
        image.get(vertex ^ column) == image[vertex] ^ 1 << index
        for vertex, level in depth.items()
        if level < radius
        for index, column in enumerate(columns)
    )
    boundary = [vertex for vertex, level in depth.items() if level == radius]
    boundary_set = set(boundary)
    boundary_extra_edges = sum(
        1
        for vertex in boundary
        for column in columns
        if vertex < vertex ^ column and vertex ^ column in boundary_set
    )
    result = LocalIsomorphism(
        center=center,
        radius=radius,
        mapping={
            vertex: BitVector.from_int(spec.n, value) for vertex, value in image.items()
        },
        well_defined=well_defined,
        bijective=bijective,
        interior_edges_ok=interior_edges_ok,
        boundary_extra_edges=boundary_extra_edges if radius else 0,
    )
    if not result.ok:
        log.warning(f"Ball of radius {radius} at vertex {center} is not isomorphic.")
    return result


def random_generator_spec(
    r: int, n: int, rng: np.random.Generator, *, max_attempts: int = 1000
) -> GeneratorSpec:
    """A uniformly drawn set of ``n`` distinct nonzero columns spanning F2^r."""
    if not r <= n < 1 << r:
        raise ParameterRangeError(
            name="n", value=n, requirement=f"needs r <= n < 2**r for r = {r}"
        )
    for _ in range(max_attempts):
        picks = rng.choice(np.arange(1, 1 << r), size=n, replace=False)
        columns = [int(value) for value in picks]
        basis = EchelonBasis(r)
        for column in columns:
            basis.add_int(column)
        if basis.rank == r:
            return GeneratorSpec.from_columns(r, columns)
    raise ParameterRangeError(
        name="n", value=n, requirement=f"no spanning draw in {max_attempts} attempts"
    )
