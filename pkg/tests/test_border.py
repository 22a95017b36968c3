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

"""Tests for borders and pseudo-borders of Cayley graphs."""

import pytest

from cqc.core.border import (
    VertexSet,
    border_of,
    is_border,
    is_pseudo_border,
    min_pseudo_border_not_border,
)
from cqc.core.cayley import CayleyGraph, GeneratorSpec
from cqc.core.exceptions import DimensionMismatchError, OddGeneratorCountError
from cqc.core.gf2 import BitVector, SearchStatus
from cqc.core.verification import full_rank_specs
from tests.fixtures.utils import met_evenly, neighborhood_rows, span_of

K44 = CayleyGraph(spec=GeneratorSpec.from_columns(3, [1, 2, 4, 7]))


def test_border_of_single_vertex_is_its_neighborhood():
    """B({v}) = N(v)."""
    assert border_of(K44, VertexSet.from_vertices(8, [0])).vertices() == [1, 2, 4, 7]
    assert border_of(K44, VertexSet.empty(8)).cardinality == 0


def test_borders_of_complete_bipartite_graph():
    """K_{4,4} has the four borders {}, the two sides and everything."""
    evens = VertexSet.from_vertices(8, [0, 3, 5, 6])
    odds = VertexSet.from_vertices(8, [1, 2, 4, 7])
    assert is_border(K44, evens)
    assert is_border(K44, odds)
    assert is_border(K44, evens ^ odds)
    assert not is_border(K44, VertexSet.from_vertices(8, [1, 2]))
    assert is_pseudo_border(K44, VertexSet.from_vertices(8, [1, 2]))
    assert not is_pseudo_border(K44, VertexSet.from_vertices(8, [0, 1]))
    assert 3 in evens and 3 not in odds


def test_vertex_set_size_must_match_graph():
    """Sets of another graph are rejected."""
    with pytest.raises(DimensionMismatchError):
        border_of(K44, VertexSet.empty(4))
    with pytest.raises(DimensionMismatchError):
        VertexSet(8, BitVector.zeros(4))


def test_correspondence_on_all_small_specs():
    """Borders are the row space and pseudo-borders the kernel of A(H)."""
    for spec in full_rank_specs(2, 4):
        graph = CayleyGraph(spec=spec)
        rows = neighborhood_rows(spec.columns, spec.r)
        span = span_of(rows)
        size = graph.vertex_count
        for value in range(1 << size):
            subset = VertexSet(size, BitVector.from_int(size, value))
            assert is_border(graph, subset) == (value in span)
            assert is_pseudo_border(graph, subset) == met_evenly(rows, value)


def test_min_pseudo_border_not_border():
    """In K_{4,4} two vertices of one side form the smallest such set."""
    search = min_pseudo_border_not_border(K44)
    assert search.status is SearchStatus.FOUND
    assert search.size == 2
    assert search.witness is not None
    assert search.witness.vertices() == [1, 2]


def test_hypercube_has_no_pseudo_border_outside_borders():
    """The quotient is trivial for the 4-cube, so K = 0."""
    search = min_pseudo_border_not_border(CayleyGraph(spec=GeneratorSpec.identity(4)))
    assert search.status is SearchStatus.NONE_EXISTS
    assert search.witness is None


def test_odd_degree_is_rejected():
    """Pseudo-borders outside borders are only searched for even n."""
    with pytest.raises(OddGeneratorCountError):
        min_pseudo_border_not_border(CayleyGraph(spec=GeneratorSpec.identity(3)))
