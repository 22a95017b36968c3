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

"""Tests for the packed GF(2) linear algebra and the minimum weight searches."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cqc.core.exceptions import DimensionMismatchError, StructuralError
from cqc.core.gf2 import (
    BitMatrix,
    BitVector,
    EchelonBasis,
    SearchStatus,
    SearchStrategy,
    fixed_weight_iter,
    fixed_weight_masks,
    in_span,
    kernel_basis,
    min_weight_in_coset,
    rank,
    rows_self_orthogonal,
    transpose,
)
from tests.fixtures.utils import min_weight, rank_of

HAMMING = BitMatrix.from_dense(
    [
        [1, 0, 1, 0, 1, 0, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ]
)

STRATEGIES = [SearchStrategy.ENUMERATE, SearchStrategy.SYNDROME_TABLE]


def test_vector_basics():
    """Construction, weight, support and arithmetic of vectors."""
    vector = BitVector.from_string("1011")
    assert vector.length == 4
    assert vector.to_int() == 0b1101
    assert vector.weight() == 3
    assert vector.support() == (0, 2, 3)
    assert str(vector) == "1011"
    assert list(vector) == [1, 0, 1, 1]
    assert vector[1] == 0

    other = BitVector.from_indices(4, [0, 1])
    assert (vector ^ other) == BitVector.from_string("0111")
    assert (vector & other) == BitVector.from_string("1000")
    assert (vector | other) == BitVector.from_string("1111")
    assert vector.dot(other) == 1
    assert BitVector.zeros(4).is_zero()


def test_vector_spanning_several_words():
    """Bits beyond the first word survive packing."""
    vector = BitVector.from_indices(130, [0, 64, 129])
    assert vector.support() == (0, 64, 129)
    assert vector.weight() == 3
    assert vector == BitVector.from_int(130, vector.to_int())


def test_vector_errors():
    """Out-of-range indices and mismatched lengths are rejected."""
    with pytest.raises(IndexError):
        BitVector.from_indices(3, [3])
    with pytest.raises(IndexError):
        BitVector.zeros(3)[5]
    with pytest.raises(DimensionMismatchError):
        BitVector.zeros(3) ^ BitVector.zeros(4)
    with pytest.raises(ValueError):
        BitVector.from_int(2, 4)


def test_matrix_dense_round_trip_and_transpose():
    """Dense conversion and transposition agree with numpy."""
    dense = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    matrix = BitMatrix.from_dense(dense)
    assert matrix.shape == (2, 3)
    assert np.array_equal(matrix.to_dense(), dense)
    assert np.array_equal(transpose(matrix).to_dense(), dense.T)
    assert matrix.column(2) == BitVector.from_string("11")
    assert matrix.to_int_rows() == [0b101, 0b110]


def test_matrix_products():
    """Matrix-vector and matrix-transpose products over GF(2)."""
    vector = BitVector.from_string("1110000")
    assert HAMMING.multiply_vector(vector) == BitVector.from_string("000")
    product = HAMMING.multiply_transpose(HAMMING)
    assert product.shape == (3, 3)
    assert not product.words.any()
    with pytest.raises(DimensionMismatchError):
        HAMMING.multiply_vector(BitVector.zeros(6))


def test_rank_kernel_and_span():
    """Rank-nullity and kernel correctness on the Hamming matrix."""
    assert rank(HAMMING) == 3
    kernel = kernel_basis(HAMMING)
    assert kernel.shape == (4, 7)
    assert rank(kernel) == 4
    assert not HAMMING.multiply_transpose(kernel).words.any()
    assert in_span(HAMMING, HAMMING.row(0) ^ HAMMING.row(2))
    assert not in_span(HAMMING, BitVector.from_string("1000000"))
    assert rows_self_orthogonal(HAMMING)
    assert not rows_self_orthogonal(BitMatrix.identity(3))


def test_kernel_of_empty_matrix_is_identity():
    """Without constraints every unit vector is a kernel basis vector."""
    assert kernel_basis(BitMatrix.zeros(0, 5)) == BitMatrix.identity(5)


@settings(max_examples=60, derandomize=True)
@given(
    rows=st.lists(st.integers(min_value=0, max_value=(1 << 9) - 1), max_size=8),
)
def test_rank_and_kernel_match_oracle(rows: list[int]):
    """Rank agrees with an independent elimination and the kernel has full size."""
    matrix = BitMatrix.from_int_rows(rows, 9)
    assert rank(matrix) == rank_of(rows)
    kernel = kernel_basis(matrix)
    assert kernel.rows == 9 - rank_of(rows)
    for vector in kernel:
        assert not matrix.multiply_vector(vector).to_int()


def test_echelon_basis():
    """Incremental insertion reports span growth."""
    basis = EchelonBasis(4)
    assert basis.add_int(0b0011)
    assert basis.add_int(0b0110)
    assert not basis.add_int(0b0101)
    assert basis.rank == 2
    assert basis.contains_int(0b0101)
    assert not basis.contains_int(0b1000)


def test_fixed_weight_masks_are_colex():
    """Gosper iteration yields every mask of a weight in increasing order."""
    masks = list(fixed_weight_masks(5, 2))
    assert masks == sorted(masks)
    assert len(masks) == 10
    assert all(mask.bit_count() == 2 for mask in masks)
    assert list(fixed_weight_masks(3, 0)) == [0]
    assert list(fixed_weight_masks(3, 3)) == [0b111]


def test_fixed_weight_vectors():
    """Every weight-3 vector of length 20 exactly once, in the order of the masks."""
    vectors = list(fixed_weight_iter(20, 3))
    assert len(vectors) == 1140
    assert len(set(vectors)) == 1140
    assert all(vector.length == 20 and vector.weight() == 3 for vector in vectors)
    assert [vector.to_int() for vector in vectors] == list(fixed_weight_masks(20, 3))

    assert list(fixed_weight_iter(4, 0)) == [BitVector.zeros(4)]
    assert list(fixed_weight_iter(4, 4)) == [BitVector.from_string("1111")]
    with pytest.raises(ValueError):
        list(fixed_weight_iter(4, 5))


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_min_weight_of_hamming_kernel(strategy: SearchStrategy):
    """The kernel code of the Hamming matrix has distance 3 and the colex-first
    witness is {x1, x2, x3}.
    """
    result = min_weight_in_coset(HAMMING, BitMatrix.zeros(0, 7), strategy=strategy)
    assert result.status is SearchStatus.FOUND
    assert result.weight == 3
    assert result.witness == BitVector.from_string("1110000")
    assert result.lower_bound == 3


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_min_weight_outside_excluded_span(strategy: SearchStrategy):
    """Vectors of the excluded span never qualify."""
    # the rows of HAMMING lie in its own kernel
    result = min_weight_in_coset(HAMMING, HAMMING, strategy=strategy)
    assert result.found
    assert result.weight == 3
    assert not in_span(HAMMING, result.witness)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_min_weight_cap_and_trivial_quotient(strategy: SearchStrategy):
    """A cap below the minimum exhausts; a trivial quotient reports none-exists."""
    capped = min_weight_in_coset(HAMMING, BitMatrix.zeros(0, 7), 2, strategy=strategy)
    assert capped.status is SearchStatus.CAP_EXHAUSTED
    assert capped.weight is None
    assert capped.lower_bound == 3

    trivial = min_weight_in_coset(
        BitMatrix.identity(4), BitMatrix.zeros(0, 4), strategy=strategy
    )
    assert trivial.status is SearchStatus.NONE_EXISTS
    assert trivial.lower_bound is None


def test_candidate_budget_stops_enumeration():
    """The budget ends the enumeration with the last fully searched weight."""
    result = min_weight_in_coset(
        HAMMING,
        BitMatrix.zeros(0, 7),
        strategy=SearchStrategy.ENUMERATE,
        candidate_budget=5,
    )
    assert result.status is SearchStatus.CAP_EXHAUSTED
    assert result.searched_weight == 0
    assert result.lower_bound == 1


def test_excluded_row_outside_kernel_is_rejected():
    """The quotient needs every excluded row inside the kernel."""
    with pytest.raises(StructuralError) as error:
        min_weight_in_coset(HAMMING, BitMatrix.from_int_rows([0b0000111, 1], 7))
    assert error.value.row == 1


def test_mismatched_column_counts_are_rejected():
    """Parity and excluded matrices must have the same number of columns."""
    with pytest.raises(DimensionMismatchError):
        min_weight_in_coset(HAMMING, BitMatrix.zeros(0, 6))


@settings(max_examples=40, derandomize=True)
@given(
    rows=st.lists(
        st.integers(min_value=1, max_value=(1 << 8) - 1), min_size=1, max_size=4
    ),
)
def test_strategies_agree_with_oracle(rows: list[int]):
    """Both strategies return the exhaustive minimum and the same witness."""
    parity = BitMatrix.from_int_rows(rows, 8)
    expected = min_weight(
        8, lambda value: all((row & value).bit_count() % 2 == 0 for row in rows)
    )
    results = [
        min_weight_in_coset(parity, BitMatrix.zeros(0, 8), strategy=strategy)
        for strategy in STRATEGIES
    ]
    assert results[0].weight == results[1].weight == expected
    assert results[0].witness == results[1].witness
