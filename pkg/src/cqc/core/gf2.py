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

"""Bit-packed linear algebra over GF(2).

Bit ``i`` of a vector is the component ``x_{i+1}``. Vectors are stored in
little-endian 64-bit words: bit ``i`` lives in word ``i // 64`` at position
``i % 64``, and the unused high bits of the last word are always zero. The same
convention maps an integer ``value`` to the vector whose support is the set bits of
``value``, which is how vertex ids, generator columns and subset masks are encoded
throughout the package.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Self

import numpy as np

from cqc.core.exceptions import DimensionMismatchError, StructuralError

log = logging.getLogger(__name__)

WORD_BITS = 64

DEFAULT_TABLE_LIMIT = 1 << 27


def _word_count(length: int) -> int:
    return (length + WORD_BITS - 1) // WORD_BITS


def _tail_mask(length: int) -> np.uint64 | None:
    rest = length % WORD_BITS
    return np.uint64((1 << rest) - 1) if rest else None


def _int_to_words(value: int, length: int) -> np.ndarray:
    raw = value.to_bytes(_word_count(length) * 8, "little")
    return np.frombuffer(raw, dtype="<u8").astype(np.uint64)


def _words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words, dtype="<u8").tobytes(), "little")


def _row_parities(words: np.ndarray) -> np.ndarray:
    """Parity of the set bits of every row of a 2-D word array."""
    folded = np.bitwise_xor.reduce(words, axis=1).astype(np.uint64)
    for shift in (32, 16, 8, 4, 2, 1):
        folded ^= folded >> np.uint64(shift)
    return (folded & np.uint64(1)).astype(np.uint8)


def iter_bits(value: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``value`` in increasing order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


class BitVector:
    """Immutable vector over GF(2)."""

    __slots__ = ("_length", "_words")

    def __init__(self, length: int, words: np.ndarray | None = None):
        if length < 0:
            raise ValueError(f"Vector length must be non-negative, got {length}.")
        n_words = _word_count(length)
        if words is None:
            packed = np.zeros(n_words, dtype=np.uint64)
        else:
            packed = np.array(words, dtype=np.uint64).reshape(-1)
            if packed.shape[0] != n_words:
                raise DimensionMismatchError(
                    expected=n_words, observed=packed.shape[0], what="word count"
                )
            tail = _tail_mask(length)
            if tail is not None:
                packed[-1] &= tail
        packed.flags.writeable = False
        self._length = length
        self._words = packed

    @classmethod
    def zeros(cls, length: int) -> Self:
        """The zero vector of the given length."""
        return cls(length)

    @classmethod
    def from_int(cls, length: int, value: int) -> Self:
        """Vector whose bit ``i`` is bit ``i`` of ``value``."""
        if value < 0 or value >> length:
            raise ValueError(f"Value {value} does not fit into {length} bits.")
        return cls(length, _int_to_words(value, length))

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> Self:
        """Vector with ones exactly at the given (0-based) positions."""
        value = 0
        for index in indices:
            if not 0 <= index < length:
                raise IndexError(f"Bit index {index} out of range for length {length}.")
            value |= 1 << index
        return cls.from_int(length, value)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> Self:
        """Vector from a sequence of 0/1 components, ``x_1`` first."""
        values = [int(bit) for bit in bits]
        if any(bit not in (0, 1) for bit in values):
            raise ValueError("Components must be 0 or 1.")
        return cls.from_indices(len(values), (i for i, bit in enumerate(values) if bit))

    @classmethod
    def from_string(cls, text: str) -> Self:
        """Vector from a string such as ``"1010"``, ``x_1`` first."""
        return cls.from_bits(int(char) for char in text if not char.isspace())

    @property
    def length(self) -> int:
        """Number of components."""
        return self._length

    @property
    def words(self) -> np.ndarray:
        """Read-only view of the packed words."""
        return self._words

    def to_int(self) -> int:
        """Integer whose bit ``i`` is component ``x_{i+1}``."""
        return _words_to_int(self._words)

    def weight(self) -> int:
        """Number of set bits."""
        return self.to_int().bit_count()

    def support(self) -> tuple[int, ...]:
        """Positions of the set bits in increasing order."""
        return tuple(iter_bits(self.to_int()))

    def is_zero(self) -> bool:
        """Whether no bit is set."""
        return not self._words.any()

    def dot(self, other: "BitVector") -> int:
        """Standard inner product over GF(2)."""
        self._check_length(other)
        return (self.to_int() & other.to_int()).bit_count() & 1

    def _check_length(self, other: "BitVector"):
        if other.length != self._length:
            raise DimensionMismatchError(expected=self._length, observed=other.length)

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self._length, self._words ^ other.words)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self._length, self._words & other.words)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self._length, self._words | other.words)

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self._length:
            raise IndexError(
                f"Bit index {index} out of range for length {self._length}."
            )
        word, bit = divmod(index, WORD_BITS)
        return int((self._words[word] >> np.uint64(bit)) & np.uint64(1))

    def __iter__(self) -> Iterator[int]:
        value = self.to_int()
        return ((value >> i) & 1 for i in range(self._length))

    def __len__(self) -> int:
        return self._length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._length == other.length and bool(
            np.array_equal(self._words, other.words)
        )

    def __hash__(self) -> int:
        return hash((self._length, self._words.tobytes()))

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self)

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


class BitMatrix:
    """Immutable matrix over GF(2), one packed word array per row."""

    __slots__ = ("_cols", "_data", "_rows")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        n_words = _word_count(cols)
        if data is None:
            packed = np.zeros((rows, n_words), dtype=np.uint64)
        else:
            packed = np.array(data, dtype=np.uint64).reshape(rows, n_words)
            tail = _tail_mask(cols)
            if tail is not None and rows:
                packed[:, -1] &= tail
        packed.flags.writeable = False
        self._rows = rows
        self._cols = cols
        self._data = packed

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Self:
        """All-zero matrix; ``zeros(0, cols)`` is the empty matrix."""
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> Self:
        """The identity matrix."""
        return cls.from_dense(np.eye(size, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], cols: int | None = None) -> Self:
        """Stack vectors of a common length."""
        if cols is None:
            if not rows:
                raise ValueError(
                    "The column count is needed for a matrix without rows."
                )
            cols = rows[0].length
        for row in rows:
            if row.length != cols:
                raise DimensionMismatchError(expected=cols, observed=row.length)
        data = np.array([row.words for row in rows], dtype=np.uint64)
        return cls(len(rows), cols, data.reshape(len(rows), _word_count(cols)))

    @classmethod
    def from_int_rows(cls, values: Sequence[int], cols: int) -> Self:
        """Matrix whose row ``i`` has the bits of ``values[i]``."""
        rows = [BitVector.from_int(cols, value) for value in values]
        return cls.from_rows(rows, cols)

    @classmethod
    def from_dense(cls, array, cols: int | None = None) -> Self:
        """Matrix from a 2-D array-like of zeros and ones."""
        dense = np.asarray(array, dtype=np.uint8)
        if dense.ndim != 2:
            if dense.size == 0 and cols is not None:
                dense = dense.reshape(0, cols)
            else:
                raise ValueError("A dense matrix needs exactly two dimensions.")
        n_rows, n_cols = dense.shape
        if cols is not None and cols != n_cols:
            raise DimensionMismatchError(
                expected=cols, observed=n_cols, what="column count"
            )
        n_words = _word_count(n_cols)
        if n_words == 0 or n_rows == 0:
            return cls(n_rows, n_cols)
        packed = np.packbits(dense & 1, axis=1, bitorder="little")
        padding = n_words * 8 - packed.shape[1]
        packed = np.pad(packed, ((0, 0), (0, padding)))
        data = np.ascontiguousarray(packed).view("<u8").astype(np.uint64)
        return cls(n_rows, n_cols, data)

    @property
    def rows(self) -> int:
        """Number of rows."""
        return self._rows

    @property
    def cols(self) -> int:
        """Number of columns."""
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        """``(rows, cols)``"""
        return self._rows, self._cols

    @property
    def words(self) -> np.ndarray:
        """Read-only view of the packed ``rows x words`` array."""
        return self._data

    @property
    def row_data(self) -> tuple[BitVector, ...]:
        """All rows as vectors."""
        return tuple(self.row(i) for i in range(self._rows))

    def row(self, index: int) -> BitVector:
        """Row ``index`` as a vector."""
        if not 0 <= index < self._rows:
            raise IndexError(f"Row {index} out of range for {self._rows} rows.")
        return BitVector(self._cols, self._data[index])

    def column(self, index: int) -> BitVector:
        """Column ``index`` as a vector of length ``rows``."""
        if not 0 <= index < self._cols:
            raise IndexError(f"Column {index} out of range for {self._cols} columns.")
        return BitVector.from_bits(self.to_dense()[:, index])

    def to_dense(self) -> np.ndarray:
        """``rows x cols`` array of zeros and ones."""
        if self._rows == 0 or self._cols == 0:
            return np.zeros((self._rows, self._cols), dtype=np.uint8)
        raw = np.ascontiguousarray(self._data, dtype="<u8").view(np.uint8)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self._cols]

    def to_int_rows(self) -> list[int]:
        """Every row as an integer."""
        return [_words_to_int(self._data[i]) for i in range(self._rows)]

    def multiply_vector(self, vector: BitVector) -> BitVector:
        """The product ``self · x``, a vector of length ``rows``."""
        if vector.length != self._cols:
            raise DimensionMismatchError(expected=self._cols, observed=vector.length)
        if self._rows == 0:
            return BitVector(0)
        return BitVector.from_bits(_row_parities(self._data & vector.words))

    def multiply_transpose(self, other: "BitMatrix") -> "BitMatrix":
        """The product ``self · otherᵀ`` (``self.rows x other.rows``)."""
        if other.cols != self._cols:
            raise DimensionMismatchError(
                expected=self._cols, observed=other.cols, what="column count"
            )
        product = np.zeros((self._rows, other.rows), dtype=np.uint8)
        if self._rows:
            for j in range(other.rows):
                product[:, j] = _row_parities(self._data & other.words[j])
        return BitMatrix.from_dense(product, cols=other.rows)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        """Rows of ``self`` followed by rows of ``other``."""
        if other.cols != self._cols:
            raise DimensionMismatchError(
                expected=self._cols, observed=other.cols, what="column count"
            )
        data = np.vstack([self._data, other.words])
        return BitMatrix(self._rows + other.rows, self._cols, data)

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.row_data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return bool(np.array_equal(self._data, other.words))

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix(rows={self._rows}, cols={self._cols})"


class EchelonBasis:
    """Incrementally grown basis of a subspace of GF(2)^length.

    Each stored row is keyed by its lowest set bit and no two rows share that bit,
    so a vector lies in the span iff repeatedly cancelling its lowest bit ends at 0.
    """

    def __init__(self, length: int):
        self._length = length
        self._rows: dict[int, int] = {}

    @classmethod
    def from_matrix(cls, matrix: BitMatrix) -> Self:
        """Basis of the row space of ``matrix``."""
        basis = cls(matrix.cols)
        for value in matrix.to_int_rows():
            basis.add_int(value)
        return basis

    @property
    def length(self) -> int:
        """Length of the ambient vectors."""
        return self._length

    @property
    def rank(self) -> int:
        """Dimension of the spanned subspace."""
        return len(self._rows)

    def reduce_int(self, value: int) -> int:
        """Cancel pivots from ``value``; zero iff ``value`` is in the span."""
        while value:
            low = value & -value
            row = self._rows.get(low)
            if row is None:
                return value
            value ^= row
        return 0

    def add_int(self, value: int) -> bool:
        """Insert ``value``; returns whether it enlarged the span."""
        residual = self.reduce_int(value)
        if not residual:
            return False
        self._rows[residual & -residual] = residual
        return True

    def contains_int(self, value: int) -> bool:
        """Span membership of an integer-encoded vector."""
        return self.reduce_int(value) == 0

    def add(self, vector: BitVector) -> bool:
        """Insert ``vector``; returns whether it enlarged the span."""
        self._check(vector)
        return self.add_int(vector.to_int())

    def contains(self, vector: BitVector) -> bool:
        """Span membership."""
        self._check(vector)
        return self.contains_int(vector.to_int())

    def _check(self, vector: BitVector):
        if vector.length != self._length:
            raise DimensionMismatchError(expected=self._length, observed=vector.length)


def _reduced_echelon(data: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination on packed rows; returns the nonzero rows and pivots."""
    work = np.array(data, dtype=np.uint64)
    n_rows = work.shape[0]
    pivots: list[int] = []
    for col in range(cols):
        rank = len(pivots)
        if rank == n_rows:
            break
        word, bit = divmod(col, WORD_BITS)
        mask = np.uint64(1 << bit)
        candidates = np.flatnonzero(work[rank:, word] & mask)
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        hits = np.flatnonzero(work[:, word] & mask)
        hits = hits[hits != rank]
        if hits.size:
            work[hits] ^= work[rank]
        pivots.append(col)
    return work[: len(pivots)], pivots


def transpose(matrix: BitMatrix) -> BitMatrix:
    """The transposed matrix."""
    return BitMatrix.from_dense(matrix.to_dense().T, cols=matrix.rows)


def rank(matrix: BitMatrix) -> int:
    """Dimension of the row space."""
    return len(_reduced_echelon(matrix.words, matrix.cols)[1])


def kernel_basis(matrix: BitMatrix) -> BitMatrix:
    """Basis of ``{x : matrix · x = 0}``, one row per free column in increasing
    order.
    """
    cols = matrix.cols
    reduced, pivots = _reduced_echelon(matrix.words, cols)
    pivot_set = set(pivots)
    free = [col for col in range(cols) if col not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            dense = BitMatrix(len(pivots), cols, reduced).to_dense()
            basis[:, pivots] = dense[:, free].T
    return BitMatrix.from_dense(basis, cols=cols)


def in_span(matrix: BitMatrix, vector: BitVector) -> bool:
    """Whether ``vector`` is a linear combination of the rows of ``matrix``."""
    if vector.length != matrix.cols:
        raise DimensionMismatchError(expected=matrix.cols, observed=vector.length)
    return EchelonBasis.from_matrix(matrix).contains(vector)


def rows_self_orthogonal(matrix: BitMatrix) -> bool:
    """Whether every two rows, a row with itself included, overlap evenly."""
    return not matrix.multiply_transpose(matrix).words.any()


def fixed_weight_masks(length: int, weight: int) -> Iterator[int]:
    """Integers below ``2**length`` with ``weight`` set bits, in increasing order.

    Increasing integer order is the colexicographic order of the supports.
    """
    if not 0 <= weight <= length:
        raise ValueError(f"Weight {weight} is not between 0 and the length {length}.")
    mask = (1 << weight) - 1
    if weight == 0:
        yield mask
        return
    limit = 1 << length
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def fixed_weight_iter(length: int, weight: int) -> Iterator[BitVector]:
    """All vectors of the given weight in colexicographic order of their supports."""
    for mask in fixed_weight_masks(length, weight):
        yield BitVector.from_int(length, mask)


class SearchStatus(StrEnum):
    """Outcome of a minimum weight search."""

    FOUND = "found"
    NONE_EXISTS = "none-exists"
    CAP_EXHAUSTED = "cap-exhausted"


class SearchStrategy(StrEnum):
    """How a minimum weight search walks the candidates."""

    AUTO = "auto"
    ENUMERATE = "enumerate"
    SYNDROME_TABLE = "syndrome-table"


@dataclass(frozen=True)
class CosetSearchResult:
    """Minimum weight search result.

    ``searched_weight`` is the largest weight for which every candidate was ruled
    out or, for ``found``, the weight of the witness.
    """

    status: SearchStatus
    weight: int | None
    witness: BitVector | None
    searched_weight: int
    strategy: SearchStrategy

    @property
    def found(self) -> bool:
        """Whether a witness was produced."""
        return self.status is SearchStatus.FOUND

    @property
    def lower_bound(self) -> int | None:
        """Proven lower bound on the minimum, ``None`` if nothing qualifies at all."""
        if self.status is SearchStatus.NONE_EXISTS:
            return None
        if self.weight is not None:
            return self.weight
        return self.searched_weight + 1


@dataclass(frozen=True)
class _CosetSystem:
    """Stacked check and logical functionals of a coset search.

    A vector qualifies iff its syndrome has all check bits clear and at least one
    logical bit set.
    """

    length: int
    check_count: int
    logical_count: int
    column_syndromes: tuple[int, ...]

    @classmethod
    def build(cls, parity: BitMatrix, excluded: BitMatrix) -> "_CosetSystem":
        reduced, _ = _reduced_echelon(parity.words, parity.cols)
        checks = BitMatrix(reduced.shape[0], parity.cols, reduced).to_int_rows()
        tracker = EchelonBasis(parity.cols)
        for row in checks:
            tracker.add_int(row)
        logicals = [
            row for row in kernel_basis(excluded).to_int_rows() if tracker.add_int(row)
        ]
        syndromes = [0] * parity.cols
        for position, row in enumerate(checks + logicals):
            for column in iter_bits(row):
                syndromes[column] |= 1 << position
        return cls(
            length=parity.cols,
            check_count=len(checks),
            logical_count=len(logicals),
            column_syndromes=tuple(syndromes),
        )

    @property
    def state_bits(self) -> int:
        return self.check_count + self.logical_count

    def table_bytes(self) -> int:
        itemsize = 1 if self.length < 255 else 2
        return (self.length + 1) * (1 << self.state_bits) * itemsize

    def qualifies(self, syndrome: int) -> bool:
        check_mask = (1 << self.check_count) - 1
        return not syndrome & check_mask and bool(syndrome >> self.check_count)


def _check_inside_kernel(parity: BitMatrix, excluded: BitMatrix):
    product = excluded.multiply_transpose(parity)
    offending = np.flatnonzero(product.words.any(axis=1)) if excluded.rows else []
    if len(offending):
        raise StructuralError(row=int(offending[0]))


def _enumerate(
    system: _CosetSystem, cap: int, budget: int | None
) -> CosetSearchResult:
    syndromes = system.column_syndromes
    checked = 0
    for weight in range(cap + 1):
        for mask in fixed_weight_masks(system.length, weight):
            syndrome = 0
            for column in iter_bits(mask):
                syndrome ^= syndromes[column]
            if system.qualifies(syndrome):
                return CosetSearchResult(
                    status=SearchStatus.FOUND,
                    weight=weight,
                    witness=BitVector.from_int(system.length, mask),
                    searched_weight=weight,
                    strategy=SearchStrategy.ENUMERATE,
                )
            checked += 1
            if budget is not None and checked >= budget:
                log.warning(
                    f"Candidate budget of {budget} exhausted inside weight {weight}."
                )
                return CosetSearchResult(
                    status=SearchStatus.CAP_EXHAUSTED,
                    weight=None,
                    witness=None,
                    searched_weight=weight - 1,
                    strategy=SearchStrategy.ENUMERATE,
                )
        log.debug(f"No qualifying vector of weight {weight}.")
    status = (
        SearchStatus.NONE_EXISTS if cap == system.length else SearchStatus.CAP_EXHAUSTED
    )
    return CosetSearchResult(
        status=status,
        weight=None,
        witness=None,
        searched_weight=cap,
        strategy=SearchStrategy.ENUMERATE,
    )


def _syndrome_table(system: _CosetSystem, cap: int) -> CosetSearchResult:
    """Exact minimum by dynamic programming over column prefixes.

    ``table[j][s]`` is the least weight of a vector supported on the first ``j``
    columns with syndrome ``s``.
    """
    size = 1 << system.state_bits
    dtype = np.uint8 if system.length < 255 else np.uint16
    infinity = np.iinfo(dtype).max
    states = np.arange(size, dtype=np.int64)
    table = np.full((system.length + 1, size), infinity, dtype=dtype)
    table[0, 0] = 0
    for column, syndrome in enumerate(system.column_syndromes):
        previous = table[column]
        moved = previous[states ^ syndrome]
        stepped = np.where(moved == infinity, infinity, moved + 1).astype(dtype)
        table[column + 1] = np.minimum(previous, stepped)

    check_mask = (1 << system.check_count) - 1
    goal = ((states & check_mask) == 0) & ((states >> system.check_count) != 0)
    reachable = table[system.length][goal]
    best = int(reachable.min()) if reachable.size else int(infinity)
    if best == infinity:
        return CosetSearchResult(
            status=SearchStatus.NONE_EXISTS,
            weight=None,
            witness=None,
            searched_weight=system.length,
            strategy=SearchStrategy.SYNDROME_TABLE,
        )
    if best > cap:
        return CosetSearchResult(
            status=SearchStatus.CAP_EXHAUSTED,
            weight=None,
            witness=None,
            searched_weight=cap,
            strategy=SearchStrategy.SYNDROME_TABLE,
        )

    # walk back choosing the smallest possible last column each time, which
    # yields the colexicographically first witness of weight ``best``
    chosen: list[int] = []
    remaining, limit = best, system.length
    while remaining:
        for column in range(remaining - 1, limit):
            syndrome = system.column_syndromes[column]
            hits = goal & (table[column][states ^ syndrome] == remaining - 1)
            if hits.any():
                goal = np.zeros(size, dtype=bool)
                goal[states[hits] ^ syndrome] = True
                chosen.append(column)
                remaining, limit = remaining - 1, column
                break
        else:
            raise RuntimeError("Syndrome table is inconsistent.")
    return CosetSearchResult(
        status=SearchStatus.FOUND,
        weight=best,
        witness=BitVector.from_indices(system.length, chosen),
        searched_weight=best,
        strategy=SearchStrategy.SYNDROME_TABLE,
    )


def min_weight_in_coset(
    parity: BitMatrix,
    excluded: BitMatrix,
    cap: int | None = None,
    *,
    strategy: SearchStrategy = SearchStrategy.AUTO,
    table_limit: int = DEFAULT_TABLE_LIMIT,
    candidate_budget: int | None = None,
) -> CosetSearchResult:
    """Minimum weight ``x`` with ``parity · x = 0`` and ``x`` outside the row space
    of ``excluded``.

    Among the minimum weight vectors the colexicographically first is returned,
    whichever strategy runs. ``cap`` defaults to the full length. The syndrome table
    strategy needs ``(length + 1) * 2**m`` bytes, ``m`` being the number of
    independent constraints; ``auto`` uses it when that fits ``table_limit`` and
    enumerates fixed-weight vectors otherwise.
    """
    if parity.cols != excluded.cols:
        raise DimensionMismatchError(
            expected=parity.cols, observed=excluded.cols, what="column count"
        )
    length = parity.cols
    cap = length if cap is None else max(0, min(cap, length))
    _check_inside_kernel(parity, excluded)

    system = _CosetSystem.build(parity, excluded)
    if system.logical_count == 0:
        log.debug("The quotient space is trivial, no vector qualifies.")
        return CosetSearchResult(
            status=SearchStatus.NONE_EXISTS,
            weight=None,
            witness=None,
            searched_weight=length,
            strategy=strategy,
        )

    if strategy is SearchStrategy.AUTO:
        strategy = (
            SearchStrategy.SYNDROME_TABLE
            if system.table_bytes() <= table_limit
            else SearchStrategy.ENUMERATE
        )
    log.debug(
        f"Coset search over {length} columns with {system.check_count} checks and"
        + f" {system.logical_count} logical functionals using {strategy}."
    )
    if strategy is SearchStrategy.SYNDROME_TABLE:
        return _syndrome_table(system, cap)
    return _enumerate(system, cap, candidate_budget)
